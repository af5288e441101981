"""Gauss (continued fraction) map ``x -> 1/x - floor(1/x)``."""

import math
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.exceptions import DomainError
from chaosrng.maps.base import Map1D

if TYPE_CHECKING:
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "DEFAULT_TRUNCATION",
    "DEGENERACY_THRESHOLD",
    "GaussMap",
    "gauss_preimages",
    "step_gauss",
)

DEFAULT_TRUNCATION = 10_000
"""Default number of branches summed for the countable preimage set."""

DEGENERACY_THRESHOLD = 1e-15
"""States below this value are treated as the absorbing point 0."""


def step_gauss(x: float) -> float:
    """Apply one Gauss map step.

    Args:
        x: State in ``[0, 1]``.

    Raises:
        DomainError: If ``x`` is outside ``[0, 1]``.

    Returns:
        The fractional part of ``1/x``, or ``0`` for ``x = 0``.
    """
    if not 0.0 <= x <= 1.0:
        msg = f"Gauss map expects x in [0, 1], got {x!r}"
        raise DomainError(msg)
    if x == 0.0:
        return 0.0
    r = 1.0 / x
    return r - math.floor(r)


def gauss_preimages(y: float, p_max: int = DEFAULT_TRUNCATION) -> list[float]:
    """Return the first ``p_max`` preimages ``1 / (y + p)`` of ``y``.

    Args:
        y: Point in ``[0, 1)``.
        p_max: Number of branches, at least 1.

    Raises:
        DomainError: If ``y`` is outside ``[0, 1)`` or ``p_max < 1``.

    Returns:
        Preimages in decreasing order, one per branch ``p = 1 .. p_max``.
    """
    if not 0.0 <= y < 1.0:
        msg = f"Gauss preimages expect y in [0, 1), got {y!r}"
        raise DomainError(msg)
    if p_max < 1:
        msg = f"p_max must be at least 1, got {p_max!r}"
        raise DomainError(msg)
    return [1.0 / (y + p) for p in range(1, p_max + 1)]


class GaussMap(Map1D):
    """The Gauss map, the shift on continued fraction digits.

    Floating point reaches rationals, which collapse to 0 in finitely many
    steps, so states below ``DEGENERACY_THRESHOLD`` are reported as degenerate.
    """

    __slots__ = ()

    name = "gauss"
    can_degenerate = True

    @property
    def params(self) -> dict[str, float]:
        return {}

    def advance(self, x: float) -> float:
        if x == 0.0:
            return 0.0
        r = 1.0 / x
        return r - math.floor(r)

    def advance_array(self, x: "FloatArray") -> "FloatArray":
        with np.errstate(divide="ignore", invalid="ignore"):
            r = 1.0 / x
            image = r - np.floor(r)
        return np.where(x == 0.0, 0.0, image)

    def derivative(self, x: float) -> float:
        if x == 0.0:
            return -math.inf
        return -1.0 / (x * x)

    def is_degenerate(self, x: float) -> bool:
        return x < DEGENERACY_THRESHOLD

    def degenerate_mask(self, x: "FloatArray") -> "np.ndarray[Any, np.dtype[np.bool_]]":
        return x < DEGENERACY_THRESHOLD

    def preimages(self, y: float, truncation: int | None = None) -> list[float]:
        return gauss_preimages(y, truncation or DEFAULT_TRUNCATION)

    def branch_preimages(self, y: "FloatArray", truncation: int | None = None) -> "FloatArray":
        p = np.arange(1, (truncation or DEFAULT_TRUNCATION) + 1, dtype=np.float64)
        return 1.0 / (np.asarray(y, dtype=np.float64)[np.newaxis, :] + p[:, np.newaxis])

    def unresolved_interval(self, truncation: int | None = None) -> tuple[float, float]:
        return (0.0, 1.0 / ((truncation or DEFAULT_TRUNCATION) + 1))
