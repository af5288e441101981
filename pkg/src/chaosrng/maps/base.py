from abc import ABC, abstractmethod
from typing import TYPE_CHECKING, Any, ClassVar

import numpy as np

from chaosrng.exceptions import DegenerateOrbitError, DomainError, NumericalError, UnsupportedMapError

if TYPE_CHECKING:
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "ChaoticMap",
    "Map1D",
    "Map2D",
    "State2D",
)

State2D = tuple[float, float]


class ChaoticMap(ABC):
    """Abstract base class for the map catalog.

    Maps are immutable descriptors: parameters are fixed at construction and
    the instances are safe to share between threads. Each map exposes a
    checked ``forward`` step and an unchecked ``advance`` hot path used by
    the orbit loop.
    """

    __slots__ = ()

    name: ClassVar[str] = ""
    dimension: ClassVar[int] = 1
    can_degenerate: ClassVar[bool] = False
    """Whether ``is_degenerate`` can ever return True for this map."""
    degeneracy_error: ClassVar[type[NumericalError]] = DegenerateOrbitError
    """Error raised for a degenerate state under the ``halt`` policy."""

    @property
    @abstractmethod
    def params(self) -> dict[str, float]:
        """Return the named parameters of the map."""
        ...

    def describe(self) -> dict[str, Any]:
        """Return a JSON-friendly description of the map.

        Returns:
            A dict with the map name and parameters.
        """
        return {"map": self.name, "params": self.params}

    def __repr__(self) -> str:
        params = ", ".join(f"{key}={value!r}" for key, value in self.params.items())
        return f"{type(self).__name__}({params})"

    def __eq__(self, other: object) -> bool:
        return type(self) is type(other) and self.params == other.params  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((type(self).__name__, tuple(sorted(self.params.items()))))


class Map1D(ChaoticMap):
    """A chaotic transformation of a closed real interval.

    Subclasses implement ``advance`` (scalar), ``advance_array`` (numpy) and
    ``derivative``. Maps with a preimage oracle also implement ``preimages``
    and ``branch_preimages``.
    """

    __slots__ = ()

    dimension: ClassVar[int] = 1
    domain: ClassVar[tuple[float, float]] = (0.0, 1.0)

    @property
    def diameter(self) -> float:
        """Return the length of the domain."""
        low, high = self.domain
        return high - low

    def contains(self, x: float) -> bool:
        """Return True if ``x`` lies in the closed domain."""
        low, high = self.domain
        return low <= x <= high

    def check_domain(self, x: float) -> None:
        """Raise ``DomainError`` when ``x`` is outside the domain.

        Args:
            x: The state to check.

        Raises:
            DomainError: If ``x`` is outside the domain or not finite.
        """
        if not self.contains(x):
            low, high = self.domain
            msg = f"{self.name} map expects x in [{low}, {high}], got {x!r}"
            raise DomainError(msg)

    def forward(self, x: float) -> float:
        """Apply one step of the map after validating the input.

        Args:
            x: Current state.

        Returns:
            The image ``T(x)``.
        """
        self.check_domain(x)
        return self.advance(x)

    @abstractmethod
    def advance(self, x: float) -> float:
        """Apply one step without validation."""
        ...

    @abstractmethod
    def advance_array(self, x: "FloatArray") -> "FloatArray":
        """Apply one step element-wise to an array of states without validation."""
        ...

    @abstractmethod
    def derivative(self, x: float) -> float:
        """Return ``T'(x)``."""
        ...

    def critical_points(self) -> tuple[float, ...]:
        """Return the points of the domain where the derivative vanishes."""
        return ()

    def is_degenerate(self, x: float) -> bool:
        """Return True when the state has collapsed and the orbit must be reseeded."""
        return False

    def degenerate_mask(self, x: "FloatArray") -> "np.ndarray[Any, np.dtype[np.bool_]]":
        """Vectorised ``is_degenerate``."""
        return np.zeros(x.shape, dtype=bool)

    def preimages(self, y: float, truncation: int | None = None) -> list[float]:
        """Return the preimages of ``y``.

        Args:
            y: Point of the domain.
            truncation: Branch bound for maps with countably many preimages.

        Raises:
            UnsupportedMapError: If the map has no preimage oracle.
        """
        msg = f"The {self.name} map has no preimage oracle"
        raise UnsupportedMapError(msg)

    def branch_preimages(self, y: "FloatArray", truncation: int | None = None) -> "FloatArray":
        """Return the preimages of ``y`` on every monotone branch.

        Args:
            y: Sorted points of the domain, typically histogram edges.
            truncation: Branch bound for maps with countably many branches.

        Returns:
            Array of shape ``(branches, len(y))``. Row ``j`` holds the inverse of
            branch ``j`` evaluated at ``y``.

        Raises:
            UnsupportedMapError: If the map has no preimage oracle.
        """
        msg = f"The {self.name} map has no preimage oracle"
        raise UnsupportedMapError(msg)

    def unresolved_interval(self, truncation: int | None = None) -> tuple[float, float] | None:
        """Return the part of the domain not covered by ``branch_preimages``.

        Only maps with countably many branches leave such an interval.
        """
        return None


class Map2D(ChaoticMap):
    """A chaotic transformation of the plane."""

    __slots__ = ()

    dimension: ClassVar[int] = 2
    escape_bound: ClassVar[float] = 10.0
    diameter: ClassVar[float] = 1.0

    def contains(self, state: State2D) -> bool:
        """Return True if the state is finite and inside the escape bound."""
        return abs(state[0]) <= self.escape_bound and np.isfinite(state[1])

    def forward(self, state: State2D) -> State2D:
        """Apply one step after validating the input.

        Args:
            state: Current ``(x, y)`` state.

        Returns:
            The image of the state.
        """
        x, y = state
        if not (np.isfinite(x) and np.isfinite(y)):
            msg = f"{self.name} map expects a finite state, got {state!r}"
            raise DomainError(msg)
        return self.advance(state)

    @abstractmethod
    def advance(self, state: State2D) -> State2D:
        """Apply one step without validation."""
        ...

    @abstractmethod
    def advance_array(self, x: "FloatArray", y: "FloatArray") -> "tuple[FloatArray, FloatArray]":
        """Apply one step element-wise to arrays of states without validation."""
        ...

    def is_degenerate(self, state: State2D) -> bool:
        """Return True when the state escaped the bound or is not finite."""
        return not abs(state[0]) <= self.escape_bound

    def degenerate_mask(self, x: "FloatArray") -> "np.ndarray[Any, np.dtype[np.bool_]]":
        """Vectorised ``is_degenerate`` over the first coordinate."""
        return ~(np.abs(x) <= self.escape_bound)
