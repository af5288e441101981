"""Numerical probes of the ergodic behaviour of the map catalog.

Time averages along orbits are compared with space averages under the
invariant law, orbits are binned to probe density and transitivity at grid
resolution, and sensitivity to initial conditions is measured by the growth
of the distance between two nearby orbits.
"""

import logging
import math
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, TypeVar

import numpy as np

from chaosrng.dynamics import Orbit, initial_state
from chaosrng.exceptions import (
    DivergenceError,
    DomainError,
    InsufficientDataError,
    NumericalError,
    UnsupportedMapError,
)
from chaosrng.maps.base import Map1D, Map2D
from chaosrng.maps.gauss import GaussMap
from chaosrng.measures.histogram import DensityHistogram, uniform_edges
from chaosrng.measures.laws import get_law

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.maps.base import ChaoticMap, State2D
    from chaosrng.measures.laws import InvariantLaw
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "SATURATION_FRACTION",
    "DivergenceProfile",
    "Observable",
    "ObservableReport",
    "birkhoff_average",
    "constant",
    "continued_fraction_digits",
    "gauss_periodic_points",
    "indicator",
    "mean_divergence_exponent",
    "sensitivity_divergence",
    "sweep_seeds",
    "transitivity_probe",
    "visit_density",
)

logger = logging.getLogger(__name__)

T = TypeVar("T")

SATURATION_FRACTION = 0.1
"""Distances at or above this fraction of the diameter end the fit window."""

_PERIODIC_TOLERANCE = 1e-12


@dataclass(slots=True, frozen=True)
class Observable:
    """A vectorised function on the state space.

    ``breakpoints`` lists the discontinuities of ``function`` so quadrature
    can split there.
    """

    name: str
    function: Callable[["npt.ArrayLike"], "npt.ArrayLike"]
    breakpoints: tuple[float, ...] = ()

    def __call__(self, x: "npt.ArrayLike") -> "FloatArray":
        return np.asarray(self.function(x), dtype=np.float64)


def indicator(low: float, high: float) -> Observable:
    """Return the indicator of the closed interval ``[low, high]``."""
    if not low <= high:
        msg = f"Indicator bounds must satisfy low <= high, got [{low}, {high}]"
        raise DomainError(msg)
    return Observable(
        name=f"1[{low!r},{high!r}]",
        function=lambda x: np.where((np.asarray(x) >= low) & (np.asarray(x) <= high), 1.0, 0.0),
        breakpoints=(low, high),
    )


def constant(value: float = 1.0) -> Observable:
    """Return the constant observable."""
    return Observable(name=f"const({value!r})", function=lambda x: np.full(np.shape(x), value, dtype=np.float64))


@dataclass(slots=True, frozen=True)
class ObservableReport:
    """Time average of an observable against its space average."""

    observable: str
    time_average: float
    reference: float | None
    abs_error: float | None
    n: int


def birkhoff_average(
    source: Orbit,
    observable: "Observable | Callable[[npt.ArrayLike], npt.ArrayLike]",
    law: "InvariantLaw | None" = None,
) -> ObservableReport:
    """Average an observable along an orbit.

    The reference value is the expectation of the observable under the
    invariant law, computed by adaptive quadrature, when the map has a
    closed-form law.

    Args:
        source: Orbit of an interval map.
        observable: An :class:`Observable` or a vectorised callable.
        law: Law for the reference value; looked up from the map when omitted.

    Raises:
        InsufficientDataError: If the orbit is empty.

    Returns:
        The :class:`ObservableReport`.
    """
    if len(source) == 0:
        msg = "Cannot average over an empty orbit"
        raise InsufficientDataError(msg)
    if not isinstance(observable, Observable):
        observable = Observable(name=getattr(observable, "__name__", "f"), function=observable)
    time_average = float(np.mean(observable(source.values)))

    if law is None and isinstance(source.chaotic_map, Map1D):
        try:
            law = get_law(source.chaotic_map)
        except UnsupportedMapError:
            law = None
    if law is None:
        return ObservableReport(observable.name, time_average, None, None, len(source))
    reference = law.expectation(observable, observable.breakpoints)
    return ObservableReport(observable.name, time_average, reference, abs(time_average - reference), len(source))


def _interval_values(source: Orbit) -> "FloatArray":
    if not isinstance(source.chaotic_map, Map1D):
        msg = f"Grid probes need a one-dimensional orbit, got the {source.map_name} map"
        raise UnsupportedMapError(msg)
    return source.values


def visit_density(source: Orbit, bins: int = 200, edges: "npt.ArrayLike | None" = None) -> DensityHistogram:
    """Return the normalised visit-frequency histogram of an orbit.

    Args:
        source: Orbit of an interval map.
        bins: Number of equal-width bins over the map's domain.
        edges: Explicit edges spanning the domain, overriding ``bins``.

    Returns:
        The empirical invariant measure.
    """
    values = _interval_values(source)
    if edges is None:
        resolved = uniform_edges(bins, source.chaotic_map.domain)  # type: ignore[attr-defined]
    else:
        resolved = np.asarray(edges, dtype=np.float64)
    counts, _ = np.histogram(values, bins=resolved)
    return DensityHistogram(resolved, counts / counts.sum())


def transitivity_probe(source: Orbit, bins: int = 100) -> float:
    """Return the fraction of equal-width bins visited at least once."""
    values = _interval_values(source)
    counts, _ = np.histogram(values, bins=uniform_edges(bins, source.chaotic_map.domain))  # type: ignore[attr-defined]
    return float(np.count_nonzero(counts)) / bins


@dataclass(slots=True, frozen=True)
class DivergenceProfile:
    """Distances between two orbits started ``epsilon`` apart.

    ``distances[n]`` is the distance after ``n`` steps, starting with the
    initial separation. ``exponent_estimate`` is the least-squares slope of
    ``log(distance)`` over ``window``, the steps before the distance first
    reaches the saturation threshold; zero distances are left out of the fit.
    It is None when fewer than two points are usable, and ``degenerate`` is
    set when every distance is zero.
    """

    epsilon: float
    distances: "FloatArray"
    exponent_estimate: float | None
    window: tuple[int, int]
    degenerate: bool = False

    @property
    def horizon(self) -> int:
        return len(self.distances) - 1

    def rows(self) -> list[tuple[int, float]]:
        """Return ``(n, distance)`` rows for serialisation."""
        return [(n, float(d)) for n, d in enumerate(self.distances)]


def _diameter(chaotic_map: "ChaoticMap") -> float:
    return float(chaotic_map.diameter)  # type: ignore[attr-defined]


def _offset(chaotic_map: "ChaoticMap", x0: Any, epsilon: float) -> Any:
    if isinstance(chaotic_map, Map2D):
        return (x0[0] + epsilon, x0[1])
    shifted = x0 + epsilon
    return shifted if chaotic_map.contains(shifted) else x0 - epsilon  # type: ignore[attr-defined]


def _distance(chaotic_map: "ChaoticMap", first: Any, second: Any) -> float:
    if isinstance(chaotic_map, Map2D):
        return math.hypot(first[0] - second[0], first[1] - second[1])
    return abs(first - second)


def sensitivity_divergence(
    chaotic_map: "ChaoticMap",
    x0: "float | State2D",
    epsilon: float = 1e-12,
    horizon: int = 60,
) -> DivergenceProfile:
    """Iterate ``x0`` and a point ``epsilon`` away in parallel.

    Args:
        chaotic_map: Map to probe.
        x0: Initial state.
        epsilon: Initial separation, positive and small against the diameter.
        horizon: Number of steps, at least 10.

    Raises:
        DomainError: If ``epsilon`` or ``horizon`` is out of range.
        DivergenceError: If either orbit leaves the finite range.

    Returns:
        The :class:`DivergenceProfile`.

    Example::

        profile = sensitivity_divergence(LogisticMap(), 0.3, epsilon=1e-12, horizon=60)
        profile.exponent_estimate  # close to log(2)
    """
    diameter = _diameter(chaotic_map)
    if not 0.0 < epsilon < SATURATION_FRACTION * diameter:
        msg = f"epsilon must lie in (0, {SATURATION_FRACTION * diameter}), got {epsilon!r}"
        raise DomainError(msg)
    if horizon < 10:
        msg = f"horizon must be at least 10, got {horizon!r}"
        raise DomainError(msg)

    first, second = x0, _offset(chaotic_map, x0, epsilon)
    advance = chaotic_map.advance
    distances = np.empty(horizon + 1, dtype=np.float64)
    distances[0] = _distance(chaotic_map, first, second)
    for n in range(1, horizon + 1):
        first, second = advance(first), advance(second)  # type: ignore[arg-type]
        distances[n] = _distance(chaotic_map, first, second)
    if not np.all(np.isfinite(distances)):
        msg = f"{chaotic_map.name} orbits diverged while measuring sensitivity"
        raise DivergenceError(msg)

    if not np.any(distances > 0.0):
        return DivergenceProfile(epsilon, distances, None, (0, 0), degenerate=True)
    saturated = np.flatnonzero(distances >= SATURATION_FRACTION * diameter)
    stop = int(saturated[0]) if len(saturated) else len(distances)
    steps = np.arange(stop)
    usable = distances[:stop] > 0.0
    if np.count_nonzero(usable) < 2:
        return DivergenceProfile(epsilon, distances, None, (0, stop))
    slope = np.polyfit(steps[usable], np.log(distances[:stop][usable]), 1)[0]
    return DivergenceProfile(epsilon, distances, float(slope), (0, stop))


def sweep_seeds(fn: Callable[[int], T], seeds: Iterable[int], max_workers: int | None = None) -> list[T]:
    """Run ``fn`` once per seed in a thread pool.

    Results come back in seed order whatever the scheduling.
    """
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(fn, seeds))


def mean_divergence_exponent(
    chaotic_map: "ChaoticMap",
    seeds: Sequence[int],
    epsilon: float = 1e-12,
    horizon: int = 60,
    burn_in: int | None = None,
    max_workers: int | None = None,
) -> float:
    """Average the sensitivity exponent over seeded initial conditions.

    Each seed starts at its seeded initial state, advanced ``burn_in`` times
    (0 for interval maps and 1000 for planar maps by default).

    Raises:
        InsufficientDataError: If no seed yields an exponent.
    """
    if burn_in is None:
        burn_in = 1_000 if isinstance(chaotic_map, Map2D) else 0

    def estimate(seed: int) -> float | None:
        state = initial_state(chaotic_map, seed)
        for _ in range(burn_in):
            state = chaotic_map.advance(state)  # type: ignore[arg-type]
        return sensitivity_divergence(chaotic_map, state, epsilon, horizon).exponent_estimate

    estimates = [value for value in sweep_seeds(estimate, seeds, max_workers) if value is not None]
    if not estimates:
        msg = "No seed produced a divergence exponent"
        raise InsufficientDataError(msg)
    if len(estimates) < len(seeds):
        logger.warning("%d of %d seeds gave a degenerate profile", len(seeds) - len(estimates), len(seeds))
    return float(np.mean(estimates))


def gauss_periodic_points(k_max: int) -> list[tuple[int, float]]:
    """Return the fixed points ``x_k`` of the Gauss map for ``k = 1 .. k_max``.

    ``x_k`` is the positive root of ``x^2 + k x - 1 = 0`` and has the
    constant continued fraction ``[0; k, k, ...]``. It is evaluated as
    ``2 / (k + sqrt(k^2 + 4))`` to avoid cancellation.

    Raises:
        DomainError: If ``k_max < 1``.
        NumericalError: If a root fails the fixed-point check.
    """
    if k_max < 1:
        msg = f"k_max must be at least 1, got {k_max!r}"
        raise DomainError(msg)
    gauss = GaussMap()
    points = []
    for k in range(1, k_max + 1):
        x = 2.0 / (k + math.sqrt(k * k + 4.0))
        if abs(gauss.advance(x) - x) >= _PERIODIC_TOLERANCE or math.floor(1.0 / x) != k:
            msg = f"Gauss fixed point for k={k} failed verification (x={x!r})"
            raise NumericalError(msg)
        points.append((k, x))
    return points


def continued_fraction_digits(x: float, n: int) -> list[int]:
    """Return up to ``n`` partial quotients of ``x`` read off its Gauss orbit.

    Digit ``i`` is ``floor(1 / T^i(x))``. The expansion stops early when the
    orbit reaches 0, which happens for every rational ``x``. Floating-point
    error grows along the orbit, so only the leading digits are reliable.

    Raises:
        DomainError: If ``x`` is outside ``[0, 1]`` or ``n < 0``.
    """
    if not 0.0 <= x <= 1.0 or n < 0:
        msg = f"continued_fraction_digits expects x in [0, 1] and n >= 0, got x={x!r}, n={n!r}"
        raise DomainError(msg)
    gauss = GaussMap()
    digits = []
    state = x
    for _ in range(n):
        if state == 0.0:
            break
        digits.append(math.floor(1.0 / state))
        state = gauss.advance(state)
    return digits
