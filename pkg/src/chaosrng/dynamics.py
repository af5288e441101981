"""Deterministic orbits of the map catalog.

Scalar orbits run a plain Python loop over the unchecked ``advance`` step of
a map. Ensembles advance many independent seeds at once with numpy and yield
the same floats as the scalar loop for every map whose array step uses the
same floating-point operations (logistic, tent, Gauss and Hénon).
"""

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.config import OrbitConfig, ReseedPolicy
from chaosrng.exceptions import DegenerateOrbitError, DomainError
from chaosrng.maps.base import ChaoticMap, Map2D
from chaosrng.maps.chebyshev import step_chebyshev
from chaosrng.maps.gauss import step_gauss
from chaosrng.maps.henon import step_henon
from chaosrng.maps.logistic import step_logistic
from chaosrng.maps.tent import step_tent
from chaosrng.utils.seeding import derive_seed, seed_to_initial

if TYPE_CHECKING:
    from chaosrng.maps.base import State2D
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "Orbit",
    "initial_state",
    "iterate_ensemble",
    "orbit",
    "orbit_ensemble",
    "seed_to_initial",
    "step_chebyshev",
    "step_gauss",
    "step_henon",
    "step_logistic",
    "step_tent",
)

logger = logging.getLogger(__name__)


@dataclass(slots=True)
class Orbit:
    """A recorded orbit.

    ``values`` has shape ``(length,)`` for interval maps and ``(length, 2)``
    for planar maps.
    """

    chaotic_map: ChaoticMap
    config: OrbitConfig
    values: "FloatArray"
    reseed_count: int = 0
    initial: "float | State2D | None" = None
    params: dict[str, Any] = field(init=False)

    def __post_init__(self) -> None:
        self.params = dict(self.chaotic_map.params)

    @property
    def map_name(self) -> str:
        return self.chaotic_map.name

    def __len__(self) -> int:
        return len(self.values)

    def provenance(self) -> dict[str, Any]:
        """Return seed, map and orbit settings for serialised artifacts."""
        return {
            "map": self.map_name,
            "params": self.params,
            "seed": self.config.seed,
            "burn_in": self.config.burn_in,
            "stride": self.config.stride,
            "reseed_policy": self.config.reseed_policy,
            "reseed_count": self.reseed_count,
        }


def initial_state(chaotic_map: ChaoticMap, seed: int) -> "float | State2D":
    """Return the seeded initial condition of a map.

    Interval maps start at ``seed_to_initial(seed)`` rescaled onto their
    domain. Planar maps start at ``(x0, 0)``.

    Args:
        chaotic_map: The map.
        seed: Unsigned 64-bit seed.

    Returns:
        A float for interval maps, an ``(x, y)`` pair for planar maps.
    """
    x0 = seed_to_initial(seed)
    if isinstance(chaotic_map, Map2D):
        return (x0, 0.0)
    low, high = chaotic_map.domain  # type: ignore[attr-defined]
    if (low, high) == (0.0, 1.0):
        return x0
    return low + (high - low) * x0


def _check_initial(chaotic_map: ChaoticMap, initial: Any) -> "float | State2D":
    if isinstance(chaotic_map, Map2D):
        x, y = (float(initial[0]), float(initial[1]))
        if not (np.isfinite(x) and np.isfinite(y)):
            msg = f"Initial state must be finite, got {initial!r}"
            raise DomainError(msg)
        return (x, y)
    value = float(initial)
    chaotic_map.check_domain(value)  # type: ignore[attr-defined]
    return value


class _Reseeder:
    """Applies the reseed policy to degenerate states of one orbit."""

    __slots__ = ("chaotic_map", "count", "policy", "seed")

    def __init__(self, chaotic_map: ChaoticMap, seed: int, policy: ReseedPolicy) -> None:
        self.chaotic_map = chaotic_map
        self.seed = seed
        self.policy = policy
        self.count = 0

    def __call__(self, state: Any, step: int) -> Any:
        if self.policy == "halt":
            msg = f"{self.chaotic_map.name} orbit degenerated at step {step} (state {state!r})"
            error = self.chaotic_map.degeneracy_error
            if issubclass(error, DegenerateOrbitError):
                raise error(msg, step, state)
            raise error(msg)
        self.count += 1
        logger.debug(
            "Reseeding %s orbit at step %d (reseed %d, state %r)", self.chaotic_map.name, step, self.count, state
        )
        return initial_state(self.chaotic_map, derive_seed(self.seed, self.count))


def orbit(chaotic_map: ChaoticMap, config: OrbitConfig, initial: "float | State2D | None" = None) -> Orbit:
    """Iterate a map from a seeded initial condition.

    The state is advanced ``config.burn_in`` times and discarded; then, for
    each of ``config.length`` recorded values, the state is advanced
    ``config.stride`` times and recorded. With ``burn_in = 0`` and
    ``stride = 1`` the recorded values are ``T(x0), T^2(x0), ...``.

    Args:
        chaotic_map: Map to iterate.
        config: Orbit configuration.
        initial: Optional explicit initial state overriding the seed mapping.

    Raises:
        DegenerateOrbitError: If an interval map degenerates under the ``halt`` policy.
        DivergenceError: If the Hénon orbit escapes under the ``halt`` policy.

    Returns:
        The recorded :class:`Orbit`.

    Example::

        values = orbit(LogisticMap(), OrbitConfig(seed=7, burn_in=1000, length=5)).values
    """
    state = initial_state(chaotic_map, config.seed) if initial is None else _check_initial(chaotic_map, initial)
    start = state
    reseed = _Reseeder(chaotic_map, config.seed, config.reseed_policy)
    advance = chaotic_map.advance
    is_degenerate = chaotic_map.is_degenerate
    check = chaotic_map.can_degenerate

    if check and is_degenerate(state):  # type: ignore[arg-type]
        state = reseed(state, 0)

    step = 0
    for _ in range(config.burn_in):
        state = advance(state)  # type: ignore[arg-type]
        step += 1
        if check and is_degenerate(state):  # type: ignore[arg-type]
            state = reseed(state, step)

    planar = isinstance(chaotic_map, Map2D)
    values = np.empty((config.length, 2) if planar else config.length, dtype=np.float64)
    stride = config.stride
    for i in range(config.length):
        for _ in range(stride):
            state = advance(state)  # type: ignore[arg-type]
            step += 1
            if check and is_degenerate(state):  # type: ignore[arg-type]
                state = reseed(state, step)
        values[i] = state

    if reseed.count:
        logger.warning(
            "%s orbit (seed %d) was reseeded %d times over %d steps",
            chaotic_map.name,
            config.seed,
            reseed.count,
            step,
        )
    return Orbit(chaotic_map=chaotic_map, config=config, values=values, reseed_count=reseed.count, initial=start)


def _ensemble_start(chaotic_map: ChaoticMap, seeds: Sequence[int]) -> "list[FloatArray]":
    states = [initial_state(chaotic_map, seed) for seed in seeds]
    if isinstance(chaotic_map, Map2D):
        pairs = np.asarray(states, dtype=np.float64).reshape(len(seeds), 2)
        return [pairs[:, 0].copy(), pairs[:, 1].copy()]
    return [np.asarray(states, dtype=np.float64)]


def iterate_ensemble(
    chaotic_map: ChaoticMap,
    seeds: Sequence[int],
    *,
    burn_in: int = 0,
    stride: int = 1,
    reseed_policy: ReseedPolicy = "perturb",
) -> "Iterator[FloatArray]":
    """Advance one orbit per seed in lockstep and yield each recorded step.

    Every lane follows the same recording rule as :func:`orbit` with the
    same seed, including reseeding with per-lane counters.

    Args:
        chaotic_map: Map to iterate.
        seeds: One seed per lane.
        burn_in: Discarded steps.
        stride: Steps per recorded value.
        reseed_policy: Action on degenerate lanes.

    Yields:
        Arrays of shape ``(len(seeds),)`` for interval maps, ``(len(seeds), 2)``
        for planar maps.
    """
    # validates burn_in, stride and policy
    OrbitConfig(seed=0, burn_in=burn_in, stride=stride, reseed_policy=reseed_policy)
    seeds = list(seeds)
    lanes = _ensemble_start(chaotic_map, seeds)
    reseeders = [_Reseeder(chaotic_map, seed, reseed_policy) for seed in seeds]
    planar = isinstance(chaotic_map, Map2D)
    check = chaotic_map.can_degenerate
    step = 0

    def advance() -> None:
        nonlocal lanes, step
        if planar:
            lanes = list(chaotic_map.advance_array(lanes[0], lanes[1]))  # type: ignore[call-arg]
        else:
            lanes = [chaotic_map.advance_array(lanes[0])]  # type: ignore[call-arg]
        step += 1
        if not check:
            return
        mask = chaotic_map.degenerate_mask(lanes[0])  # type: ignore[attr-defined]
        for i in np.flatnonzero(mask):
            state = (float(lanes[0][i]), float(lanes[1][i])) if planar else float(lanes[0][i])
            fresh = reseeders[i](state, step)
            if planar:
                lanes[0][i], lanes[1][i] = fresh
            else:
                lanes[0][i] = fresh

    for _ in range(burn_in):
        advance()
    while True:
        for _ in range(stride):
            advance()
        yield np.column_stack(lanes) if planar else lanes[0].copy()


def orbit_ensemble(
    chaotic_map: ChaoticMap,
    seeds: Sequence[int],
    length: int,
    *,
    burn_in: int = 0,
    stride: int = 1,
    reseed_policy: ReseedPolicy = "perturb",
) -> "FloatArray":
    """Return ``length`` recorded values for each seed.

    Args:
        chaotic_map: Map to iterate.
        seeds: One seed per lane.
        length: Number of recorded values per lane.
        burn_in: Discarded steps.
        stride: Steps per recorded value.
        reseed_policy: Action on degenerate lanes.

    Returns:
        Array of shape ``(len(seeds), length)`` (or ``(len(seeds), length, 2)``
        for planar maps). Row ``i`` matches ``orbit(...).values`` for ``seeds[i]``.
    """
    if length < 1:
        msg = f"length must be at least 1, got {length!r}"
        raise DomainError(msg)
    stream = iterate_ensemble(chaotic_map, seeds, burn_in=burn_in, stride=stride, reseed_policy=reseed_policy)
    rows = [next(stream) for _ in range(length)]
    return np.stack(rows, axis=1)