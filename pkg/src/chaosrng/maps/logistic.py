"""Logistic map ``x -> lam * x * (1 - x)`` on the unit interval."""

import math
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.exceptions import DomainError, UnsupportedMapError
from chaosrng.maps.base import Map1D

if TYPE_CHECKING:
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "LogisticMap",
    "logistic_preimages",
    "step_logistic",
)


def _check_lam(lam: float) -> None:
    if not 0.0 <= lam <= 4.0:
        msg = f"Logistic parameter lam must lie in [0, 4], got {lam!r}"
        raise DomainError(msg)


def step_logistic(x: float, lam: float = 4.0) -> float:
    """Apply one logistic step.

    Args:
        x: State in ``[0, 1]``.
        lam: Growth parameter in ``[0, 4]``.

    Raises:
        DomainError: If ``x`` or ``lam`` is out of range.

    Returns:
        ``lam * x * (1 - x)``, clamped into ``[0, 1]`` against negative zero.
    """
    _check_lam(lam)
    if not 0.0 <= x <= 1.0:
        msg = f"Logistic map expects x in [0, 1], got {x!r}"
        raise DomainError(msg)
    return min(1.0, max(0.0, lam * x * (1.0 - x)))


def logistic_preimages(y: float, lam: float = 4.0) -> list[float]:
    """Return the solutions of ``lam * x * (1 - x) = y``.

    The small root is computed as ``2y / (lam (1 + s))`` to avoid the
    cancellation in ``(1 - s) / 2``.

    Args:
        y: Point in ``[0, 1]``.
        lam: Growth parameter in ``(0, 4]``.

    Raises:
        DomainError: If ``y`` is outside ``[0, 1]``.

    Returns:
        Both roots in increasing order, the double root ``[0.5]`` when
        ``y = lam / 4``, or an empty list above the maximum of the map.
    """
    _check_lam(lam)
    if not 0.0 <= y <= 1.0:
        msg = f"Logistic preimages expect y in [0, 1], got {y!r}"
        raise DomainError(msg)
    if lam == 0.0:
        return []
    discriminant = 1.0 - 4.0 * y / lam
    if discriminant < 0.0:
        return []
    if discriminant == 0.0:
        return [0.5]
    s = math.sqrt(discriminant)
    return [2.0 * y / (lam * (1.0 + s)), (1.0 + s) / 2.0]


class LogisticMap(Map1D):
    """The logistic map, the default generator at ``lam = 4``.

    Example::

        chaotic_map = LogisticMap(lam=4.0)
        chaotic_map.forward(0.5)  # 1.0
    """

    __slots__ = ("_repelling_fixed", "lam")

    name = "logistic"
    can_degenerate = True

    def __init__(self, lam: float = 4.0) -> None:
        """Initialize the logistic map.

        Args:
            lam: Growth parameter in ``[0, 4]``.
        """
        _check_lam(lam)
        self.lam = float(lam)
        # the inner fixed point 1 - 1/lam repels only above lam = 3
        self._repelling_fixed = 1.0 - 1.0 / self.lam if self.lam > 3.0 else math.nan

    @property
    def params(self) -> dict[str, float]:
        return {"lam": self.lam}

    def advance(self, x: float) -> float:
        return min(1.0, max(0.0, self.lam * x * (1.0 - x)))

    def advance_array(self, x: "FloatArray") -> "FloatArray":
        return np.clip(self.lam * x * (1.0 - x), 0.0, 1.0)

    def derivative(self, x: float) -> float:
        return self.lam * (1.0 - 2.0 * x)

    def is_degenerate(self, x: float) -> bool:
        """Return True for states that pin the orbit to a repelling fixed point.

        Rounding near 1/2 sends the state to exactly 1, then 0, where it
        stays. The inner fixed point counts when it repels (``lam > 3``).
        Below ``lam = 1`` the origin attracts and nothing is degenerate.
        """
        if self.lam <= 1.0:
            return False
        return x == 0.0 or x == 1.0 or x == self._repelling_fixed

    def degenerate_mask(self, x: "FloatArray") -> "np.ndarray[Any, np.dtype[np.bool_]]":
        if self.lam <= 1.0:
            return np.zeros(x.shape, dtype=bool)
        return (x == 0.0) | (x == 1.0) | (x == self._repelling_fixed)

    def critical_points(self) -> tuple[float, ...]:
        return (0.5,) if self.lam > 0.0 else ()

    def preimages(self, y: float, truncation: int | None = None) -> list[float]:
        return logistic_preimages(y, self.lam)

    def branch_preimages(self, y: "FloatArray", truncation: int | None = None) -> "FloatArray":
        if self.lam == 0.0:
            msg = "The logistic map with lam = 0 is constant and has no invertible branch"
            raise UnsupportedMapError(msg)
        clipped = np.minimum(np.asarray(y, dtype=np.float64), self.lam / 4.0)
        s = np.sqrt(np.maximum(0.0, 1.0 - 4.0 * clipped / self.lam))
        return np.vstack([2.0 * clipped / (self.lam * (1.0 + s)), (1.0 + s) / 2.0])
