"""Geometric Brownian motion driven by chaos-derived Gaussians.

Paths are stepped with the exact lognormal scheme

    S(t + dt) = S(t) * exp((mu - sigma**2 / 2) * dt + sigma * sqrt(dt) * Z)

so the only error in the simulated law comes from the Gaussians ``Z``. Each
path owns the seed ``derive_seed(master_seed, i)``; its normals are Box-Muller
pairs of the uniformised logistic orbit of that seed, taken ``stride``
iterates apart.
"""

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.config import GbmConfig, ThresholdConfig
from chaosrng.dynamics import orbit_ensemble
from chaosrng.exceptions import InsufficientDataError, ZeroVarianceError
from chaosrng.maps.logistic import LogisticMap
from chaosrng.measures.laws import LOGISTIC_LAW
from chaosrng.sampling.transforms import box_muller
from chaosrng.stattests import run_battery
from chaosrng.utils.seeding import derive_seed

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.stattests import TestReport
    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "MIN_NORMALITY_SAMPLES",
    "PathSet",
    "chaotic_normals",
    "gbm_paths",
    "normality_report",
)

logger = logging.getLogger(__name__)

MIN_NORMALITY_SAMPLES = 1_000
_CHUNK_PATHS = 10_000


def chaotic_normals(
    seeds: Sequence[int],
    n: int,
    *,
    burn_in: int = 1_000,
    stride: int = 16,
) -> "FloatArray":
    """Return ``n`` standard normals for each seed.

    Row ``i`` equals ``gaussian_pairs`` applied to the uniformised logistic
    orbit of ``seeds[i]`` recorded with the given burn-in and stride,
    truncated to ``n`` values.

    Returns:
        Array of shape ``(len(seeds), n)``.
    """
    length = n + n % 2
    values = orbit_ensemble(LogisticMap(), seeds, length, burn_in=burn_in, stride=stride)
    uniforms = np.clip(np.asarray(LOGISTIC_LAW.cdf(values), dtype=np.float64), 0.0, 1.0)
    z1, z2 = box_muller(uniforms[:, 0::2], uniforms[:, 1::2])
    normals = np.empty_like(uniforms)
    normals[:, 0::2] = z1
    normals[:, 1::2] = z2
    return normals[:, :n]


@dataclass(slots=True, frozen=True)
class PathSet:
    """Simulated prices on a common time grid.

    ``paths[i, j]`` is the price of path ``i`` at ``times[j]``; ``times`` runs
    from 0 to the horizon in ``steps`` equal increments.
    """

    times: "FloatArray"
    paths: "FloatArray"
    config: GbmConfig

    @property
    def n_paths(self) -> int:
        return int(self.paths.shape[0])

    @property
    def terminal(self) -> "FloatArray":
        return self.paths[:, -1]

    def log_returns(self) -> "FloatArray":
        """Return ``ln(S_T / S0)`` per path."""
        return np.log(self.terminal / self.config.s0)

    def standardized_increments(self) -> "FloatArray":
        """Recover the Gaussian drivers from the log-price increments.

        Raises:
            ZeroVarianceError: If ``sigma`` is 0, where the increments carry no noise.
        """
        config = self.config
        if config.sigma == 0.0:
            msg = "Increments are deterministic when sigma is 0"
            raise ZeroVarianceError(msg)
        drift = (config.mu - 0.5 * config.sigma**2) * config.dt
        increments = np.diff(np.log(self.paths), axis=1)
        return ((increments - drift) / (config.sigma * math.sqrt(config.dt))).ravel()

    def summary(self) -> dict[str, Any]:
        """Return terminal moments against the lognormal identities."""
        config = self.config
        expected_mean = config.s0 * math.exp(config.mu * config.horizon)
        mean_terminal = float(np.mean(self.terminal))
        expected_variance = config.sigma**2 * config.horizon
        log_variance = float(np.var(self.log_returns(), ddof=1)) if self.n_paths > 1 else 0.0
        return {
            "n_paths": self.n_paths,
            "steps": config.steps,
            "mean_terminal": mean_terminal,
            "expected_mean_terminal": expected_mean,
            "mean_ratio": mean_terminal / expected_mean,
            "log_return_variance": log_variance,
            "expected_log_return_variance": expected_variance,
            "variance_ratio": log_variance / expected_variance if expected_variance > 0.0 else None,
        }

    def rows(self) -> Iterator[tuple[float, int, float]]:
        """Yield ``(time, path_id, price)`` rows, path by path."""
        for path_id in range(self.n_paths):
            for time, price in zip(self.times, self.paths[path_id], strict=True):
                yield float(time), path_id, float(price)


def gbm_paths(config: GbmConfig) -> PathSet:
    """Simulate ``config.n_paths`` geometric Brownian motion paths.

    Paths are generated in chunks, and path ``i`` depends only on
    ``(master_seed, i)``, so the result does not depend on the chunking.

    Args:
        config: Simulation parameters.

    Returns:
        The :class:`PathSet`. With ``sigma = 0`` every path is
        ``s0 * exp(mu * t)`` on the grid.
    """
    times = np.linspace(0.0, config.horizon, config.steps + 1)
    drift = (config.mu - 0.5 * config.sigma**2) * times[1:]
    paths = np.empty((config.n_paths, config.steps + 1), dtype=np.float64)
    paths[:, 0] = config.s0
    scale = config.sigma * math.sqrt(config.dt)

    for start in range(0, config.n_paths, _CHUNK_PATHS):
        stop = min(start + _CHUNK_PATHS, config.n_paths)
        seeds = [derive_seed(config.master_seed, i) for i in range(start, stop)]
        normals = chaotic_normals(seeds, config.steps, burn_in=config.burn_in, stride=config.stride)
        brownian = scale * np.cumsum(normals, axis=1)
        paths[start:stop, 1:] = config.s0 * np.exp(drift + brownian)
        logger.debug("Simulated paths %d-%d of %d", start, stop - 1, config.n_paths)
    return PathSet(times=times, paths=paths, config=config)


def normality_report(increments: "npt.ArrayLike", thresholds: ThresholdConfig | None = None) -> "list[TestReport]":
    """Check standardised increments against the standard normal law.

    Runs the moment checks, the Kolmogorov-Smirnov distance to the normal
    CDF and the Jarque-Bera statistic.

    Raises:
        InsufficientDataError: If there are fewer than 1000 increments.
        ZeroVarianceError: If the increments are constant.
    """
    values = np.asarray(increments, dtype=np.float64).ravel()
    if len(values) < MIN_NORMALITY_SAMPLES:
        msg = f"normality_report needs at least {MIN_NORMALITY_SAMPLES} increments, got {len(values)}"
        raise InsufficientDataError(msg)
    return run_battery(values, ("moments", "ks", "jb"), thresholds, cdf="normal")
