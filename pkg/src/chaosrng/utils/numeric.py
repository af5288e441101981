"""Scalar and array coercion helpers shared by maps, laws and distributions."""

from typing import TypeAlias

import numpy as np
import numpy.typing as npt

from chaosrng.exceptions import DomainError

__all__ = (
    "FloatArray",
    "FloatOrArray",
    "as_result",
    "ensure_in_interval",
)

FloatArray: TypeAlias = npt.NDArray[np.float64]
FloatOrArray: TypeAlias = float | FloatArray


def as_result(values: "npt.ArrayLike") -> FloatOrArray:
    """Return a Python float for 0-d input and a float64 array otherwise.

    Args:
        values: Result of a vectorised computation.

    Returns:
        ``float`` when ``values`` is a scalar, else an ``ndarray``.
    """
    array = np.asarray(values, dtype=np.float64)
    if array.ndim == 0:
        return float(array)
    return array


def ensure_in_interval(values: "npt.ArrayLike", low: float, high: float, name: str = "x") -> FloatArray:
    """Validate that every value lies in the closed interval ``[low, high]``.

    Args:
        values: Scalar or array of values.
        low: Lower bound.
        high: Upper bound.
        name: Name used in the error message.

    Raises:
        DomainError: If any value is outside the interval or not finite.

    Returns:
        The values as a float64 array.
    """
    array = np.asarray(values, dtype=np.float64)
    if not np.all((array >= low) & (array <= high)):
        msg = f"{name} must lie in [{low}, {high}]"
        raise DomainError(msg)
    return array
