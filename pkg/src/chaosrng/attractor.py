"""Hénon attractor experiments: point clouds, 2D densities and box counting."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.config import OrbitConfig
from chaosrng.dynamics import orbit
from chaosrng.exceptions import DomainError, InsufficientDataError
from chaosrng.maps.henon import HenonMap

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "MIN_DIMENSION_POINTS",
    "Density2D",
    "DimensionFit",
    "PointCloud2D",
    "box_counting_dimension",
    "empirical_density_2d",
    "henon_cloud",
    "monte_carlo_density_2d",
)

logger = logging.getLogger(__name__)

MIN_DIMENSION_POINTS = 100_000
"""Smallest cloud accepted by :func:`box_counting_dimension`."""

_COARSE_SCALES_DROPPED = 2
_SATURATION_DIVISOR = 10

Bounds = tuple[float, float, float, float]
"""``(x_min, x_max, y_min, y_max)``."""


@dataclass(slots=True, frozen=True)
class PointCloud2D:
    """Points of a planar orbit, one ``(x, y)`` row per iterate."""

    points: "FloatArray"
    a: float
    b: float
    seed: int | None = None
    burn_in: int = 0

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=np.float64)
        if points.ndim != 2 or points.shape[1] != 2:
            msg = f"Point cloud must have shape (n, 2), got {points.shape}"
            raise DomainError(msg)
        if not np.all(np.isfinite(points)):
            msg = "Point cloud contains non-finite points"
            raise DomainError(msg)
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def x(self) -> "FloatArray":
        return self.points[:, 0]

    @property
    def y(self) -> "FloatArray":
        return self.points[:, 1]

    def bounding_box(self) -> Bounds:
        """Return the tight bounding box of the cloud."""
        low = self.points.min(axis=0)
        high = self.points.max(axis=0)
        return (float(low[0]), float(high[0]), float(low[1]), float(high[1]))

    def provenance(self) -> dict[str, Any]:
        return {"map": "henon", "params": {"a": self.a, "b": self.b}, "seed": self.seed, "burn_in": self.burn_in}


def henon_cloud(a: float = 1.4, b: float = 0.3, seed: int = 0, burn_in: int = 1_000, n: int = 100_000) -> PointCloud2D:
    """Record ``n`` Hénon iterates after a burn-in.

    The orbit starts at ``(x0, 0)`` with ``x0`` derived from ``seed`` and
    runs under the ``halt`` policy, so parameters that leave the basin of
    the attractor fail instead of being reseeded.

    Args:
        a: Quadratic parameter.
        b: Contraction parameter.
        seed: Seed of the initial condition.
        burn_in: Discarded iterates.
        n: Number of recorded points.

    Raises:
        DivergenceError: If the orbit escapes.

    Returns:
        The :class:`PointCloud2D`.
    """
    if n < 1:
        msg = f"n must be at least 1, got {n!r}"
        raise InsufficientDataError(msg)
    config = OrbitConfig(seed=seed, burn_in=burn_in, length=n, reseed_policy="halt")
    recorded = orbit(HenonMap(a, b), config)
    return PointCloud2D(recorded.values, a=float(a), b=float(b), seed=seed, burn_in=burn_in)


@dataclass(slots=True, frozen=True)
class Density2D:
    """Normalised occupancy grid; ``masses[ix, iy]`` covers one cell."""

    x_edges: "FloatArray"
    y_edges: "FloatArray"
    masses: "FloatArray"

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.x_edges) - 1, len(self.y_edges) - 1)

    @property
    def total_mass(self) -> float:
        return float(self.masses.sum())

    def occupied_fraction(self) -> float:
        """Return the fraction of cells with positive mass."""
        return float(np.count_nonzero(self.masses)) / self.masses.size

    def l1_distance(self, other: "Density2D") -> float:
        """Return the L1 distance between two grids over the same cells.

        Raises:
            DomainError: If the grids differ.
        """
        if not (np.array_equal(self.x_edges, other.x_edges) and np.array_equal(self.y_edges, other.y_edges)):
            msg = "L1 distance needs grids over the same cells"
            raise DomainError(msg)
        return float(np.abs(self.masses - other.masses).sum())

    def rows(self) -> list[tuple[int, int, float]]:
        """Return ``(ix, iy, mass)`` rows for serialisation."""
        nx, ny = self.shape
        return [(ix, iy, float(self.masses[ix, iy])) for ix in range(nx) for iy in range(ny)]


def _padded(low: float, high: float) -> tuple[float, float]:
    # a flat extent gets a unit-wide cell range
    if high > low:
        return low, high
    return low - 0.5, high + 0.5


def empirical_density_2d(
    cloud: PointCloud2D,
    grid: tuple[int, int] = (256, 256),
    bounds: Bounds | None = None,
) -> Density2D:
    """Bin a cloud into a normalised ``nx x ny`` occupancy grid.

    Args:
        cloud: Nonempty point cloud.
        grid: Number of cells along x and y.
        bounds: Grid extent; the cloud's bounding box when omitted.

    Raises:
        InsufficientDataError: If the cloud is empty.
        DomainError: If the grid is not positive.

    Returns:
        The :class:`Density2D`.
    """
    if len(cloud) == 0:
        msg = "Cannot bin an empty point cloud"
        raise InsufficientDataError(msg)
    nx, ny = grid
    if nx < 1 or ny < 1:
        msg = f"grid must be positive, got {grid!r}"
        raise DomainError(msg)
    x_min, x_max, y_min, y_max = cloud.bounding_box() if bounds is None else bounds
    x_range = _padded(x_min, x_max)
    y_range = _padded(y_min, y_max)
    counts, x_edges, y_edges = np.histogram2d(cloud.x, cloud.y, bins=(nx, ny), range=(x_range, y_range))
    total = counts.sum()
    if total == 0:
        msg = "No point of the cloud falls inside the grid bounds"
        raise InsufficientDataError(msg)
    return Density2D(x_edges, y_edges, counts / total)


def monte_carlo_density_2d(
    a: float = 1.4,
    b: float = 0.3,
    seeds: Sequence[int] = (0, 1, 2, 3),
    burn_in: int = 1_000,
    n: int = 100_000,
    grid: tuple[int, int] = (256, 256),
) -> Density2D:
    """Average the empirical density of several seeded clouds.

    All clouds are binned over the union of their bounding boxes and the
    grids are summed in seed order.

    Raises:
        InsufficientDataError: If ``seeds`` is empty.
    """
    if not seeds:
        msg = "monte_carlo_density_2d needs at least one seed"
        raise InsufficientDataError(msg)
    clouds = [henon_cloud(a, b, seed, burn_in, n) for seed in seeds]
    boxes = np.array([cloud.bounding_box() for cloud in clouds])
    bounds = (boxes[:, 0].min(), boxes[:, 1].max(), boxes[:, 2].min(), boxes[:, 3].max())
    densities = [empirical_density_2d(cloud, grid, bounds) for cloud in clouds]
    total = np.zeros_like(densities[0].masses)
    for density in densities:
        total += density.masses
    return Density2D(densities[0].x_edges, densities[0].y_edges, total / len(densities))


@dataclass(slots=True, frozen=True)
class DimensionFit:
    """Box counts per scale and the fitted slope.

    ``scales`` decrease, so ``counts`` are nondecreasing along the arrays.
    ``fit_window`` is the ``[start, stop)`` index range used for the slope.
    """

    scales: "FloatArray"
    counts: "npt.NDArray[np.int64]"
    slope: float
    fit_window: tuple[int, int]

    def rows(self) -> list[tuple[float, int]]:
        return [(float(eps), int(count)) for eps, count in zip(self.scales, self.counts, strict=True)]


def _occupied_boxes(points: "FloatArray", origin: "FloatArray", side: float) -> int:
    cells = np.floor((points - origin) / side).astype(np.int64)
    keys = cells[:, 0] * (int(cells[:, 1].max()) + 1) + cells[:, 1]
    return len(np.unique(keys))


def box_counting_dimension(
    cloud: "PointCloud2D | npt.ArrayLike",
    k_min: int = 2,
    k_max: int = 10,
    min_points: int = MIN_DIMENSION_POINTS,
) -> DimensionFit:
    """Estimate the box-counting dimension of a planar point set.

    Boxes of side ``diag * 2**-k`` are laid on nested grids anchored at the
    lower corner of the bounding box, where ``diag`` is its diagonal. The
    slope of ``log N`` against ``log(1/side)`` is fitted after dropping the
    two coarsest scales and every scale with more than ``points / 10``
    occupied boxes.

    Args:
        cloud: A :class:`PointCloud2D` or an ``(n, 2)`` array.
        k_min: Coarsest scale exponent.
        k_max: Finest scale exponent.
        min_points: Minimum number of points.

    Raises:
        InsufficientDataError: If there are too few points or fewer than two
            scales survive the filters.
        DomainError: If the scale range is empty or the set has no extent.

    Returns:
        The :class:`DimensionFit`.

    Example::

        fit = box_counting_dimension(henon_cloud(n=1_000_000), k_min=2, k_max=10)
        fit.slope  # about 1.26
    """
    points = cloud.points if isinstance(cloud, PointCloud2D) else np.asarray(cloud, dtype=np.float64)
    if len(points) < min_points:
        msg = f"Box counting needs at least {min_points} points, got {len(points)}"
        raise InsufficientDataError(msg)
    if not 0 <= k_min < k_max:
        msg = f"Scale exponents must satisfy 0 <= k_min < k_max, got {k_min!r}, {k_max!r}"
        raise DomainError(msg)

    origin = points.min(axis=0)
    diagonal = float(np.hypot(*(points.max(axis=0) - origin)))
    if diagonal == 0.0:
        msg = "Box counting needs a set with positive extent"
        raise DomainError(msg)

    exponents = np.arange(k_min, k_max + 1)
    scales = diagonal * np.exp2(-exponents.astype(np.float64))
    counts = np.array([_occupied_boxes(points, origin, side) for side in scales], dtype=np.int64)

    start = _COARSE_SCALES_DROPPED
    saturated = np.flatnonzero(counts > len(points) / _SATURATION_DIVISOR)
    stop = int(saturated[0]) if len(saturated) else len(scales)
    if len(saturated):
        logger.debug("Dropping %d saturated scales from the fit window", len(scales) - stop)
    if stop - start < 2:
        msg = f"Fewer than two scales left in the fit window [{start}, {stop})"
        raise InsufficientDataError(msg)

    window = slice(start, stop)
    slope = np.polyfit(np.log(1.0 / scales[window]), np.log(counts[window]), 1)[0]
    return DimensionFit(scales=scales, counts=counts, slope=float(slope), fit_window=(start, stop))
