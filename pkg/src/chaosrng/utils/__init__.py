"""Utilities for chaosrng.

This package provides seed mixing and scalar/array coercion helpers.
"""

from chaosrng.utils.numeric import FloatOrArray, as_result, ensure_in_interval
from chaosrng.utils.seeding import derive_seed, mix64, seed_to_initial

__all__ = (
    "FloatOrArray",
    "as_result",
    "derive_seed",
    "ensure_in_interval",
    "mix64",
    "seed_to_initial",
)
