"""Histogram measures and their push-forward under interval maps.

The push-forward of a histogram assigns each output bin ``[c, d]`` the input
mass of its preimage, computed branch by branch: on a monotone branch with
inverse ``g`` the preimage is the interval between ``g(c)`` and ``g(d)``, and
its mass is read from the monotone cubic cumulative mass of the input.
"""

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import interpolate

from chaosrng.exceptions import DomainError, UnsupportedMapError
from chaosrng.maps.base import Map1D

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.measures.laws import InvariantLaw
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "MASS_TOLERANCE",
    "DensityHistogram",
    "discretize_law",
    "equal_mass_edges",
    "iterate_pushforward",
    "l1_distance",
    "left_concentrated_histogram",
    "pushforward",
    "right_concentrated_histogram",
    "uniform_edges",
    "uniform_histogram",
)

MASS_TOLERANCE = 1e-12


@dataclass(slots=True, frozen=True)
class DensityHistogram:
    """A probability measure carried by bin masses over sorted edges.

    Example::

        hist = uniform_histogram(200)
        hist = pushforward(hist, LogisticMap())
    """

    edges: "FloatArray"
    masses: "FloatArray"

    def __post_init__(self) -> None:
        edges = np.asarray(self.edges, dtype=np.float64)
        masses = np.asarray(self.masses, dtype=np.float64)
        if edges.ndim != 1 or len(edges) < 2 or masses.shape != (len(edges) - 1,):
            msg = "A histogram needs at least two edges and one mass per bin"
            raise DomainError(msg)
        if not np.all(np.diff(edges) > 0.0):
            msg = "Histogram edges must be strictly increasing"
            raise DomainError(msg)
        if np.any(masses < 0.0):
            msg = "Histogram masses must be non-negative"
            raise DomainError(msg)
        if abs(masses.sum() - 1.0) > MASS_TOLERANCE:
            msg = f"Histogram masses must sum to 1, got {masses.sum()!r}"
            raise DomainError(msg)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "masses", masses)

    @property
    def bins(self) -> int:
        return len(self.masses)

    @property
    def total_mass(self) -> float:
        return float(self.masses.sum())

    @property
    def widths(self) -> "FloatArray":
        return np.diff(self.edges)

    def densities(self) -> "FloatArray":
        """Return the mass per unit length of every bin."""
        return self.masses / self.widths

    def cumulative(self, x: "npt.ArrayLike") -> "FloatArray":
        """Evaluate the cumulative mass at ``x``.

        The cumulative is the monotone cubic (PCHIP) interpolant of the mass
        at the edges, so it is exact at every edge and never decreases.
        Values below the first edge give 0 and values above the last edge
        give the total mass.
        """
        cumulative = np.concatenate(([0.0], np.cumsum(self.masses)))
        interpolant = interpolate.PchipInterpolator(self.edges, cumulative, extrapolate=False)
        clipped = np.clip(np.asarray(x, dtype=np.float64), self.edges[0], self.edges[-1])
        return np.asarray(interpolant(clipped), dtype=np.float64)

    def rows(self) -> list[tuple[float, float, float]]:
        """Return ``(edge_low, edge_high, mass)`` rows for serialisation."""
        return [
            (float(low), float(high), float(mass))
            for low, high, mass in zip(self.edges[:-1], self.edges[1:], self.masses, strict=True)
        ]


def uniform_edges(bins: int, domain: tuple[float, float] = (0.0, 1.0)) -> "FloatArray":
    """Return ``bins + 1`` equal-width edges spanning ``domain``."""
    _check_bins(bins)
    return np.linspace(domain[0], domain[1], bins + 1)


def equal_mass_edges(law: "InvariantLaw", bins: int) -> "FloatArray":
    """Return edges that split ``law`` into ``bins`` bins of equal mass.

    Equal-mass bins are narrow where the density is singular, so the
    interpolated cumulative stays accurate near the endpoints of the arcsine
    laws. The push-forward checks use these edges; on equal-width edges the
    arcsine singularities dominate the discretisation error.
    """
    _check_bins(bins)
    edges = np.asarray(law.quantile(np.linspace(0.0, 1.0, bins + 1)), dtype=np.float64)
    edges[0], edges[-1] = law.support
    return edges


def _check_bins(bins: int) -> None:
    if bins < 1:
        msg = f"bins must be at least 1, got {bins!r}"
        raise DomainError(msg)


def _resolve_edges(
    edges: "npt.ArrayLike | None", bins: int, domain: tuple[float, float]
) -> "FloatArray":
    if edges is None:
        return uniform_edges(bins, domain)
    return np.asarray(edges, dtype=np.float64)


def _normalised_position(edges: "FloatArray") -> "FloatArray":
    return (edges - edges[0]) / (edges[-1] - edges[0])


def uniform_histogram(
    bins: int = 200, domain: tuple[float, float] = (0.0, 1.0), edges: "npt.ArrayLike | None" = None
) -> DensityHistogram:
    """Return the histogram of the uniform measure on the edge range."""
    resolved = _resolve_edges(edges, bins, domain)
    t = _normalised_position(resolved)
    return DensityHistogram(resolved, np.diff(t))


def left_concentrated_histogram(
    bins: int = 200, domain: tuple[float, float] = (0.0, 1.0), edges: "npt.ArrayLike | None" = None
) -> DensityHistogram:
    """Return the histogram of the density ``3 (1 - t)^2`` in the normalised position ``t``."""
    resolved = _resolve_edges(edges, bins, domain)
    t = _normalised_position(resolved)
    return DensityHistogram(resolved, -np.diff((1.0 - t) ** 3))


def right_concentrated_histogram(
    bins: int = 200, domain: tuple[float, float] = (0.0, 1.0), edges: "npt.ArrayLike | None" = None
) -> DensityHistogram:
    """Return the histogram of the density ``3 t^2`` in the normalised position ``t``."""
    resolved = _resolve_edges(edges, bins, domain)
    t = _normalised_position(resolved)
    return DensityHistogram(resolved, np.diff(t**3))


def discretize_law(law: "InvariantLaw", bins: int = 200, edges: "npt.ArrayLike | None" = None) -> DensityHistogram:
    """Return the exact bin masses of ``law`` from its closed-form CDF.

    Args:
        law: Invariant law to discretise.
        bins: Number of equal-width bins over the support, used when ``edges`` is None.
        edges: Explicit edges spanning the support.

    Returns:
        The discretised law.
    """
    resolved = _resolve_edges(edges, bins, law.support)
    cdf = np.asarray(law.cdf(resolved), dtype=np.float64)
    masses = np.maximum(np.diff(cdf), 0.0)
    return DensityHistogram(resolved, masses / masses.sum())


def l1_distance(first: DensityHistogram, second: DensityHistogram) -> float:
    """Return the L1 distance between two histograms on the same edges.

    Raises:
        DomainError: If the edges differ.
    """
    if not np.array_equal(first.edges, second.edges):
        msg = "L1 distance requires histograms on identical edges"
        raise DomainError(msg)
    return float(np.abs(first.masses - second.masses).sum())


def pushforward(hist: DensityHistogram, chaotic_map: "Map1D", truncation: int | None = None) -> DensityHistogram:
    """Push a histogram forward through one step of an interval map.

    The output uses the same edges as the input. Maps with countably many
    branches leave an unresolved interval next to their accumulation point;
    its mass is spread over the output bins in proportion to their widths.

    Args:
        hist: Input measure; its edges must span the map's domain.
        chaotic_map: Interval map with a preimage oracle.
        truncation: Number of branches for maps with countably many branches.

    Raises:
        UnsupportedMapError: If the map has no preimage oracle.
        DomainError: If the edges do not span the map's domain.

    Returns:
        The image measure.
    """
    if not isinstance(chaotic_map, Map1D):
        msg = f"The {chaotic_map.name} map has no preimage oracle"
        raise UnsupportedMapError(msg)
    low, high = chaotic_map.domain
    edges = hist.edges
    if edges[0] != low or edges[-1] != high:
        msg = f"Push-forward needs edges spanning the {chaotic_map.name} domain [{low}, {high}]"
        raise DomainError(msg)

    preimages = chaotic_map.branch_preimages(edges, truncation)
    cumulative = hist.cumulative(preimages)
    masses = np.abs(np.diff(cumulative, axis=1)).sum(axis=0)

    unresolved = chaotic_map.unresolved_interval(truncation)
    if unresolved is not None:
        tail = float(hist.cumulative(unresolved[1]) - hist.cumulative(unresolved[0]))
        masses = masses + tail * hist.widths / (high - low)
    return DensityHistogram(edges, masses)


def iterate_pushforward(
    hist: DensityHistogram, chaotic_map: "Map1D", iterations: int, truncation: int | None = None
) -> list[DensityHistogram]:
    """Return the sequence ``hist, T_* hist, ..., T_*^iterations hist``."""
    sequence = [hist]
    for _ in range(iterations):
        sequence.append(pushforward(sequence[-1], chaotic_map, truncation))
    return sequence
