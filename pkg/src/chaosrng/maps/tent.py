"""Tent map ``x -> 2x`` for ``x <= 1/2`` and ``2(1 - x)`` otherwise.

Every float is a dyadic rational, so floating-point tent orbits collapse to
0 within roughly 55 steps. The map is kept for analytic checks (its invariant
law is uniform) but is not recommended for long orbit generation.
"""

from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.exceptions import DomainError
from chaosrng.maps.base import Map1D

if TYPE_CHECKING:
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "TentMap",
    "step_tent",
)


def step_tent(x: float) -> float:
    """Apply one tent map step.

    Args:
        x: State in ``[0, 1]``.

    Raises:
        DomainError: If ``x`` is outside ``[0, 1]``.

    Returns:
        The piecewise-linear image in ``[0, 1]``.
    """
    if not 0.0 <= x <= 1.0:
        msg = f"Tent map expects x in [0, 1], got {x!r}"
        raise DomainError(msg)
    return 2.0 * x if x <= 0.5 else 2.0 * (1.0 - x)


class TentMap(Map1D):
    """The symmetric tent map with slope 2."""

    __slots__ = ()

    name = "tent"
    can_degenerate = True

    @property
    def params(self) -> dict[str, float]:
        return {}

    def advance(self, x: float) -> float:
        return 2.0 * x if x <= 0.5 else 2.0 * (1.0 - x)

    def advance_array(self, x: "FloatArray") -> "FloatArray":
        return np.where(x <= 0.5, 2.0 * x, 2.0 * (1.0 - x))

    def derivative(self, x: float) -> float:
        return 2.0 if x <= 0.5 else -2.0

    def is_degenerate(self, x: float) -> bool:
        # dyadic collapse onto the fixed point 0
        return x == 0.0

    def degenerate_mask(self, x: "FloatArray") -> "np.ndarray[Any, np.dtype[np.bool_]]":
        return x == 0.0

    def preimages(self, y: float, truncation: int | None = None) -> list[float]:
        if not 0.0 <= y <= 1.0:
            msg = f"Tent preimages expect y in [0, 1], got {y!r}"
            raise DomainError(msg)
        if y == 1.0:
            return [0.5]
        return [y / 2.0, 1.0 - y / 2.0]

    def branch_preimages(self, y: "FloatArray", truncation: int | None = None) -> "FloatArray":
        y = np.asarray(y, dtype=np.float64)
        return np.vstack([y / 2.0, 1.0 - y / 2.0])
