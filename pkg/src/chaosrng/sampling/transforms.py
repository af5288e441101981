"""From chaotic orbits to samples of arbitrary laws.

The pipeline is ``orbit -> uniformize -> generalized_inverse``. An orbit is
turned into a uniform stream by the CDF of its invariant law, and the stream
is mapped through the generalised inverse ``inf {x : F(x) >= u}`` of the
target distribution.
"""

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.config import OrbitConfig, ReseedPolicy
from chaosrng.dynamics import Orbit, orbit
from chaosrng.exceptions import ConfigurationError, DomainError, InsufficientDataError, SupportError
from chaosrng.maps import get_map
from chaosrng.maps.base import Map2D
from chaosrng.measures.laws import get_law
from chaosrng.utils.numeric import as_result
from chaosrng.utils.seeding import derive_seed

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.maps.base import ChaoticMap
    from chaosrng.measures.laws import InvariantLaw
    from chaosrng.sampling.distributions import DistributionSpec
    from chaosrng.utils.numeric import FloatArray, FloatOrArray

__all__ = (
    "BISECTION_MAX_ITER",
    "BISECTION_TOLERANCE",
    "BOX_MULLER_FLOOR",
    "SampleBatch",
    "UniformStream",
    "box_muller",
    "gaussian_pairs",
    "generalized_inverse",
    "multivariate_sample",
    "sample_law",
    "uniformize",
)

logger = logging.getLogger(__name__)

BISECTION_TOLERANCE = 1e-12
BISECTION_MAX_ITER = 200
BOX_MULLER_FLOOR = 1e-300
"""Lower clamp of the radial uniform, keeping ``log(u1)`` finite."""

_MAX_EXPANSIONS = 1_100


@dataclass(slots=True)
class UniformStream:
    """Uniformised orbit values in ``[0, 1]``."""

    source: str
    law: str
    values: "FloatArray"
    provenance: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.float64)
        if not np.all((self.values >= 0.0) & (self.values <= 1.0)):
            msg = "Uniform stream values must lie in [0, 1]"
            raise DomainError(msg)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(slots=True)
class SampleBatch:
    """Samples of a target law together with their provenance.

    ``values`` has shape ``(n,)`` for scalar laws and ``(n, d)`` for
    multivariate samples. ``dropped_last`` is set when an odd-length stream
    lost its final value while forming Gaussian pairs.
    """

    spec: str
    values: "FloatArray"
    provenance: dict[str, Any] = field(default_factory=dict)
    dropped_last: bool = False

    def __len__(self) -> int:
        return len(self.values)

    @property
    def dimension(self) -> int:
        return 1 if self.values.ndim == 1 else int(self.values.shape[1])


def uniformize(source: Orbit, law: "InvariantLaw | None" = None) -> UniformStream:
    """Apply the invariant CDF to every orbit value.

    Args:
        source: Orbit of an interval map.
        law: Invariant law of the map; looked up from the map when omitted.

    Raises:
        UnsupportedMapError: If the map has no closed-form invariant law.
        SupportError: If orbit values fall outside the support of the law.

    Returns:
        The :class:`UniformStream`, in orbit order.
    """
    if isinstance(source.chaotic_map, Map2D):
        msg = f"Cannot uniformize a {source.map_name} orbit: planar maps have no closed-form law"
        raise SupportError(msg)
    law = get_law(source.chaotic_map) if law is None else law
    if not law.contains(source.values):
        low, high = law.support
        msg = f"{source.map_name} orbit leaves the support [{low}, {high}] of the {law.name} law"
        raise SupportError(msg)
    values = np.clip(np.asarray(law.cdf(source.values), dtype=np.float64), 0.0, 1.0)
    provenance = source.provenance() | {"law": law.name}
    return UniformStream(source=source.map_name, law=law.name, values=values, provenance=provenance)


def _expand(spec: "DistributionSpec", start: float, u: "FloatArray", direction: float) -> "FloatArray":
    bound = np.full(u.shape, start)
    step = np.full(u.shape, max(1.0, abs(start)))
    for _ in range(_MAX_EXPANSIONS):
        cdf = spec.cdf(bound)
        grow = cdf >= u if direction < 0 else cdf < u
        if not grow.any():
            break
        bound = np.where(grow, bound + direction * step, bound)
        step = np.where(grow, 2.0 * step, step)
    return bound


def _bisect_inverse(spec: "DistributionSpec", u: "FloatArray") -> "FloatArray":
    low, high = spec.support
    if math.isfinite(low):
        lo = np.full(u.shape, low)
    else:
        lo = _expand(spec, min(-1.0, high - 1.0), u, -1.0)
    if math.isfinite(high):
        hi = np.full(u.shape, high)
    else:
        hi = _expand(spec, max(1.0, low + 1.0), u, 1.0)

    # F(lo) < u <= F(hi) holds on every lane that is not already at the lower bound
    at_lower = spec.cdf(lo) >= u
    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (lo + hi)
        active = (hi - lo > BISECTION_TOLERANCE) & ~at_lower & (mid > lo) & (mid < hi)
        if not active.any():
            break
        right = active & (spec.cdf(mid) < u)
        lo = np.where(right, mid, lo)
        hi = np.where(active & ~right, mid, hi)
    return np.where(at_lower, lo, hi)


def generalized_inverse(spec: "DistributionSpec", u: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``inf {x : F(x) >= u}`` element-wise.

    A closed-form quantile is used when the spec provides one. Discrete specs
    return the smallest atom whose cumulative probability reaches ``u``.
    Otherwise the infimum is found by bisection to an absolute tolerance of
    ``1e-12``, keeping ``F(lo) < u <= F(hi)`` throughout.

    Args:
        spec: Target distribution.
        u: Scalar or array of levels in ``[0, 1]``.

    Raises:
        DomainError: If a level is outside ``[0, 1]``.
        SupportError: If ``u = 0`` with support unbounded below, or ``u = 1``
            with support unbounded above.

    Returns:
        A float for scalar input, else an array of the same shape.

    Example::

        generalized_inverse(get_distribution("exponential", rate=1.0), 1 - math.exp(-1))  # 1.0
    """
    levels = np.asarray(u, dtype=np.float64)
    if not np.all((levels >= 0.0) & (levels <= 1.0)):
        msg = "Levels of the generalized inverse must lie in [0, 1]"
        raise DomainError(msg)

    if spec.is_discrete:
        cumulative = spec.cumulative_probs()
        index = np.minimum(np.searchsorted(cumulative, levels, side="left"), len(cumulative) - 1)
        return as_result(np.asarray(spec.atoms, dtype=np.float64)[index])

    low, high = spec.support
    if not math.isfinite(low) and np.any(levels == 0.0):
        msg = f"u = 0 has no finite inverse: the {spec.name} support is unbounded below"
        raise SupportError(msg)
    if not math.isfinite(high) and np.any(levels == 1.0):
        msg = f"u = 1 has no finite inverse: the {spec.name} support is unbounded above"
        raise SupportError(msg)

    if spec.quantile is not None:
        return as_result(np.asarray(spec.quantile(levels), dtype=np.float64))
    flat = levels.reshape(-1)
    return as_result(_bisect_inverse(spec, flat).reshape(levels.shape))


def sample_law(stream: UniformStream, spec: "DistributionSpec", n: int) -> SampleBatch:
    """Map the first ``n`` uniforms of a stream through the generalised inverse.

    Raises:
        InsufficientDataError: If the stream holds fewer than ``n`` values.
    """
    if n < 0:
        msg = f"n must be non-negative, got {n!r}"
        raise DomainError(msg)
    if n > len(stream):
        msg = f"Stream holds {len(stream)} uniforms, {n} requested"
        raise InsufficientDataError(msg)
    values = np.asarray(generalized_inverse(spec, stream.values[:n]), dtype=np.float64).reshape(n)
    provenance = stream.provenance | {"spec": spec.describe()}
    return SampleBatch(spec=spec.name, values=values, provenance=provenance)


def box_muller(u1: "npt.ArrayLike", u2: "npt.ArrayLike") -> "tuple[FloatArray, FloatArray]":
    """Return the Box-Muller pair ``(r cos(2 pi u2), r sin(2 pi u2))`` with ``r = sqrt(-2 ln u1)``.

    ``u1`` is clamped below by ``BOX_MULLER_FLOOR``.
    """
    radius = np.sqrt(-2.0 * np.log(np.maximum(np.asarray(u1, dtype=np.float64), BOX_MULLER_FLOOR)))
    angle = 2.0 * math.pi * np.asarray(u2, dtype=np.float64)
    return radius * np.cos(angle), radius * np.sin(angle)


def gaussian_pairs(stream: UniformStream) -> SampleBatch:
    """Turn consecutive uniform pairs into standard normals.

    Values ``2i`` and ``2i + 1`` form one Box-Muller pair and produce normals
    ``2i`` and ``2i + 1``. An odd-length stream loses its last value and the
    batch is flagged with ``dropped_last``.
    """
    values = stream.values
    dropped = len(values) % 2 == 1
    if dropped:
        logger.warning("Odd-length uniform stream (%d values): dropping the last value", len(values))
        values = values[:-1]
    z1, z2 = box_muller(values[0::2], values[1::2])
    normals = np.empty(len(values), dtype=np.float64)
    normals[0::2] = z1
    normals[1::2] = z2
    provenance = stream.provenance | {"transform": "box-muller"}
    return SampleBatch(spec="normal", values=normals, provenance=provenance, dropped_last=dropped)


def multivariate_sample(
    master_seed: int,
    marginals: "Sequence[DistributionSpec]",
    n: int,
    chaotic_map: "ChaoticMap | None" = None,
    *,
    d: int | None = None,
    burn_in: int = 1_000,
    stride: int = 1,
    reseed_policy: ReseedPolicy = "perturb",
) -> SampleBatch:
    """Draw ``n`` vectors with independent coordinates and the given marginals.

    Coordinate ``i`` comes from its own orbit seeded with
    ``derive_seed(master_seed, i)``, uniformised and mapped through the
    generalised inverse of ``marginals[i]``. Separate orbits keep the serial
    dependence of one orbit out of the joint law.

    Args:
        master_seed: Seed from which per-coordinate seeds are derived.
        marginals: One distribution per coordinate.
        n: Number of vectors.
        chaotic_map: Map driving every coordinate, the logistic map by default.
        d: Expected dimension; must match ``len(marginals)`` when given.
        burn_in: Discarded iterates per orbit.
        stride: Orbit stride.
        reseed_policy: Degeneracy policy of the orbits.

    Raises:
        InsufficientDataError: If the dimension is 0.
        ConfigurationError: If ``d`` disagrees with the number of marginals.

    Returns:
        A batch whose values have shape ``(n, d)``.
    """
    dimension = len(marginals) if d is None else d
    if dimension < 1:
        msg = "Multivariate samples need at least one dimension"
        raise InsufficientDataError(msg)
    if dimension != len(marginals):
        msg = f"Dimension {dimension} does not match the {len(marginals)} marginals"
        raise ConfigurationError(msg)
    chaotic_map = get_map("logistic") if chaotic_map is None else chaotic_map
    law = get_law(chaotic_map)

    columns = []
    seeds = []
    for i, spec in enumerate(marginals):
        seed = derive_seed(master_seed, i)
        seeds.append(seed)
        if n == 0:
            columns.append(np.empty(0, dtype=np.float64))
            continue
        config = OrbitConfig(seed=seed, burn_in=burn_in, length=n, stride=stride, reseed_policy=reseed_policy)
        stream = uniformize(orbit(chaotic_map, config), law)
        columns.append(sample_law(stream, spec, n).values)

    provenance = {
        "map": chaotic_map.name,
        "params": dict(chaotic_map.params),
        "master_seed": master_seed,
        "seeds": seeds,
        "burn_in": burn_in,
        "stride": stride,
        "marginals": [spec.describe() for spec in marginals],
    }
    return SampleBatch(
        spec="independent(" + ", ".join(spec.name for spec in marginals) + ")",
        values=np.column_stack(columns) if n else np.empty((0, dimension), dtype=np.float64),
        provenance=provenance,
    )
