from chaosrng.__metadata__ import __version__
from chaosrng.applications import PathSet, gbm_paths, normality_report
from chaosrng.attractor import (
    Density2D,
    DimensionFit,
    PointCloud2D,
    box_counting_dimension,
    empirical_density_2d,
    henon_cloud,
    monte_carlo_density_2d,
)
from chaosrng.config import ChaosConfig, GbmConfig, OrbitConfig, ThresholdConfig
from chaosrng.dynamics import (
    Orbit,
    initial_state,
    iterate_ensemble,
    orbit,
    orbit_ensemble,
    seed_to_initial,
    step_chebyshev,
    step_gauss,
    step_henon,
    step_logistic,
    step_tent,
)
from chaosrng.ergodics import (
    DivergenceProfile,
    Observable,
    ObservableReport,
    birkhoff_average,
    continued_fraction_digits,
    gauss_periodic_points,
    indicator,
    mean_divergence_exponent,
    sensitivity_divergence,
    sweep_seeds,
    transitivity_probe,
    visit_density,
)
from chaosrng.exceptions import (
    ChaosError,
    ConfigurationError,
    DegenerateOrbitError,
    DivergenceError,
    DomainError,
    InsufficientDataError,
    NumericalError,
    SingularPointError,
    SupportError,
    UnsupportedMapError,
    VerificationError,
    ZeroVarianceError,
)
from chaosrng.maps import (
    ChaoticMap,
    ChebyshevMap,
    GaussMap,
    HenonMap,
    LogisticMap,
    Map1D,
    Map2D,
    TentMap,
    get_map,
    get_map_class,
    list_maps,
    register_map,
)
from chaosrng.measures import DensityHistogram, InvariantLaw, fp_residual, get_law, pushforward
from chaosrng.sampling import (
    ChaosGenerator,
    DistributionSpec,
    SampleBatch,
    UniformStream,
    gaussian_pairs,
    generalized_inverse,
    get_distribution,
    multivariate_sample,
    sample_law,
    uniformize,
)
from chaosrng.stattests import TestReport, run_battery
from chaosrng.verification import VerificationReport, run_verification

__all__ = (
    "ChaosConfig",
    "ChaosError",
    "ChaosGenerator",
    "ChaoticMap",
    "ChebyshevMap",
    "ConfigurationError",
    "DegenerateOrbitError",
    "Density2D",
    "DensityHistogram",
    "DimensionFit",
    "DistributionSpec",
    "DivergenceError",
    "DivergenceProfile",
    "DomainError",
    "GaussMap",
    "GbmConfig",
    "HenonMap",
    "InsufficientDataError",
    "InvariantLaw",
    "LogisticMap",
    "Map1D",
    "Map2D",
    "NumericalError",
    "Observable",
    "ObservableReport",
    "Orbit",
    "OrbitConfig",
    "PathSet",
    "PointCloud2D",
    "SampleBatch",
    "SingularPointError",
    "SupportError",
    "TentMap",
    "TestReport",
    "ThresholdConfig",
    "UniformStream",
    "UnsupportedMapError",
    "VerificationError",
    "VerificationReport",
    "ZeroVarianceError",
    "__version__",
    "birkhoff_average",
    "box_counting_dimension",
    "continued_fraction_digits",
    "empirical_density_2d",
    "fp_residual",
    "gauss_periodic_points",
    "gaussian_pairs",
    "gbm_paths",
    "generalized_inverse",
    "get_distribution",
    "get_law",
    "get_map",
    "get_map_class",
    "henon_cloud",
    "indicator",
    "initial_state",
    "iterate_ensemble",
    "list_maps",
    "mean_divergence_exponent",
    "monte_carlo_density_2d",
    "multivariate_sample",
    "normality_report",
    "orbit",
    "orbit_ensemble",
    "pushforward",
    "register_map",
    "run_battery",
    "run_verification",
    "sample_law",
    "seed_to_initial",
    "sensitivity_divergence",
    "step_chebyshev",
    "step_gauss",
    "step_henon",
    "step_logistic",
    "step_tent",
    "sweep_seeds",
    "transitivity_probe",
    "uniformize",
    "visit_density",
)
