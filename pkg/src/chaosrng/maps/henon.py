"""Hénon map ``(x, y) -> (1 - a x^2 + y, b x)``."""

import math
from typing import TYPE_CHECKING

from chaosrng.exceptions import DivergenceError, DomainError
from chaosrng.maps.base import Map2D

if TYPE_CHECKING:
    from chaosrng.maps.base import State2D
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "HenonMap",
    "step_henon",
)


def step_henon(x: float, y: float, a: float = 1.4, b: float = 0.3) -> "State2D":
    """Apply one Hénon step.

    Args:
        x: First coordinate.
        y: Second coordinate.
        a: Quadratic parameter.
        b: Contraction parameter.

    Raises:
        DomainError: If an input is not finite.
        DivergenceError: If the result is not finite.

    Returns:
        The image ``(1 - a x^2 + y, b x)``.
    """
    if not all(math.isfinite(value) for value in (x, y, a, b)):
        msg = f"Hénon map expects finite inputs, got x={x!r}, y={y!r}, a={a!r}, b={b!r}"
        raise DomainError(msg)
    image = (1.0 - a * x * x + y, b * x)
    if not (math.isfinite(image[0]) and math.isfinite(image[1])):
        msg = f"Hénon step diverged from ({x!r}, {y!r})"
        raise DivergenceError(msg)
    return image


class HenonMap(Map2D):
    """The Hénon map, by default at the classical parameters ``a = 1.4, b = 0.3``.

    Orbits with ``|x| > 10`` are treated as escaped: beyond that bound the
    quadratic term guarantees blow-up.
    """

    __slots__ = ("a", "b")

    name = "henon"
    can_degenerate = True
    degeneracy_error = DivergenceError
    diameter = 3.0
    """Approximate extent of the classical attractor, used for saturation thresholds."""

    def __init__(self, a: float = 1.4, b: float = 0.3) -> None:
        """Initialize the Hénon map.

        Args:
            a: Quadratic parameter.
            b: Contraction parameter.
        """
        if not (math.isfinite(a) and math.isfinite(b)):
            msg = f"Hénon parameters must be finite, got a={a!r}, b={b!r}"
            raise DomainError(msg)
        self.a = float(a)
        self.b = float(b)

    @property
    def params(self) -> dict[str, float]:
        return {"a": self.a, "b": self.b}

    def advance(self, state: "State2D") -> "State2D":
        x, y = state
        return (1.0 - self.a * x * x + y, self.b * x)

    def advance_array(self, x: "FloatArray", y: "FloatArray") -> "tuple[FloatArray, FloatArray]":
        return 1.0 - self.a * x * x + y, self.b * x
