"""Chebyshev map ``x -> cos(k arccos x)`` on ``[-1, 1]``."""

import math
from typing import TYPE_CHECKING

import numpy as np

from chaosrng.exceptions import DomainError
from chaosrng.maps.base import Map1D

if TYPE_CHECKING:
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "ChebyshevMap",
    "step_chebyshev",
)


def _check_degree(k: int) -> None:
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        msg = f"Chebyshev degree k must be an integer >= 2, got {k!r}"
        raise DomainError(msg)


def step_chebyshev(x: float, k: int = 2) -> float:
    """Apply one Chebyshev map step.

    Args:
        x: State in ``[-1, 1]``.
        k: Degree, an integer of at least 2.

    Raises:
        DomainError: If ``x`` or ``k`` is out of range.

    Returns:
        ``cos(k * arccos(x))``.
    """
    _check_degree(k)
    if not -1.0 <= x <= 1.0:
        msg = f"Chebyshev map expects x in [-1, 1], got {x!r}"
        raise DomainError(msg)
    return math.cos(k * math.acos(x))


class ChebyshevMap(Map1D):
    """The degree-``k`` Chebyshev map.

    Branch ``j`` covers ``arccos x`` in ``[j pi / k, (j + 1) pi / k]`` and is
    monotone there.
    """

    __slots__ = ("k",)

    name = "chebyshev"
    domain = (-1.0, 1.0)

    def __init__(self, k: int = 2) -> None:
        """Initialize the Chebyshev map.

        Args:
            k: Degree, an integer of at least 2.
        """
        k = int(k) if isinstance(k, float) and k.is_integer() else k
        _check_degree(k)
        self.k = k

    @property
    def params(self) -> dict[str, float]:
        return {"k": self.k}

    def advance(self, x: float) -> float:
        return math.cos(self.k * math.acos(x))

    def advance_array(self, x: "FloatArray") -> "FloatArray":
        return np.cos(self.k * np.arccos(x))

    def derivative(self, x: float) -> float:
        theta = math.acos(x)
        sin_theta = math.sin(theta)
        if sin_theta == 0.0:
            # T_k'(1) = k^2 and T_k'(-1) = (-1)^(k+1) k^2
            return float(self.k * self.k) if x > 0 else float((-1) ** (self.k + 1) * self.k * self.k)
        return self.k * math.sin(self.k * theta) / sin_theta

    def critical_points(self) -> tuple[float, ...]:
        return tuple(math.cos(j * math.pi / self.k) for j in range(1, self.k))

    def _branch_angles(self, theta: "FloatArray") -> "FloatArray":
        rows = []
        for j in range(self.k):
            if j % 2 == 0:
                rows.append((theta + j * math.pi) / self.k)
            else:
                rows.append(((j + 1) * math.pi - theta) / self.k)
        return np.vstack(rows)

    def preimages(self, y: float, truncation: int | None = None) -> list[float]:
        if not -1.0 <= y <= 1.0:
            msg = f"Chebyshev preimages expect y in [-1, 1], got {y!r}"
            raise DomainError(msg)
        angles = self._branch_angles(np.array([math.acos(y)]))[:, 0]
        return sorted({math.cos(angle) for angle in angles})

    def branch_preimages(self, y: "FloatArray", truncation: int | None = None) -> "FloatArray":
        theta = np.arccos(np.clip(np.asarray(y, dtype=np.float64), -1.0, 1.0))
        return np.cos(self._branch_angles(theta))
