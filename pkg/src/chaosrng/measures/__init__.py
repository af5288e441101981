"""Invariant laws, transfer-operator checks and histogram push-forwards."""

from chaosrng.maps.gauss import gauss_preimages
from chaosrng.maps.logistic import logistic_preimages
from chaosrng.measures.histogram import (
    DensityHistogram,
    discretize_law,
    equal_mass_edges,
    iterate_pushforward,
    l1_distance,
    left_concentrated_histogram,
    pushforward,
    right_concentrated_histogram,
    uniform_edges,
    uniform_histogram,
)
from chaosrng.measures.laws import (
    CHEBYSHEV_LAW,
    GAUSS_LAW,
    LOGISTIC_LAW,
    UNIFORM_LAW,
    InvariantLaw,
    chebyshev_cdf,
    chebyshev_density,
    chebyshev_quantile,
    gauss_cdf,
    gauss_density,
    gauss_quantile,
    get_law,
    logistic_cdf,
    logistic_density,
    logistic_quantile,
)
from chaosrng.measures.transfer import FPCheck, fp_check, fp_residual, fp_residual_grid

__all__ = (
    "CHEBYSHEV_LAW",
    "GAUSS_LAW",
    "LOGISTIC_LAW",
    "UNIFORM_LAW",
    "DensityHistogram",
    "FPCheck",
    "InvariantLaw",
    "chebyshev_cdf",
    "chebyshev_density",
    "chebyshev_quantile",
    "discretize_law",
    "equal_mass_edges",
    "fp_check",
    "fp_residual",
    "fp_residual_grid",
    "gauss_cdf",
    "gauss_density",
    "gauss_preimages",
    "gauss_quantile",
    "get_law",
    "iterate_pushforward",
    "l1_distance",
    "left_concentrated_histogram",
    "logistic_cdf",
    "logistic_density",
    "logistic_preimages",
    "logistic_quantile",
    "pushforward",
    "right_concentrated_histogram",
    "uniform_edges",
    "uniform_histogram",
)
