"""Inverse-transform sampling from chaotic orbits."""

from chaosrng.sampling.distributions import (
    DistributionSpec,
    bernoulli,
    continuous_spec,
    discrete_spec,
    exponential,
    get_distribution,
    list_distributions,
    normal,
    register_distribution,
    uniform,
)
from chaosrng.sampling.service import ChaosGenerator
from chaosrng.sampling.transforms import (
    SampleBatch,
    UniformStream,
    box_muller,
    gaussian_pairs,
    generalized_inverse,
    multivariate_sample,
    sample_law,
    uniformize,
)

__all__ = (
    "ChaosGenerator",
    "DistributionSpec",
    "SampleBatch",
    "UniformStream",
    "bernoulli",
    "box_muller",
    "continuous_spec",
    "discrete_spec",
    "exponential",
    "gaussian_pairs",
    "generalized_inverse",
    "get_distribution",
    "list_distributions",
    "multivariate_sample",
    "normal",
    "register_distribution",
    "sample_law",
    "uniform",
    "uniformize",
)
