from typing import TYPE_CHECKING

import numpy as np

from chaosrng.dynamics import Orbit, orbit
from chaosrng.sampling.transforms import (
    SampleBatch,
    UniformStream,
    gaussian_pairs,
    multivariate_sample,
    sample_law,
    uniformize,
)

if TYPE_CHECKING:
    from collections.abc import Sequence

    from chaosrng.config import ChaosConfig
    from chaosrng.maps.base import ChaoticMap
    from chaosrng.sampling.distributions import DistributionSpec

__all__ = ("ChaosGenerator",)


class ChaosGenerator:
    """High-level helper running the generation pipeline for one configuration.

    Every call restarts from the configured seed, so results depend only on
    the configuration and the requested size.

    Example::

        generator = ChaosConfig(seed=7).get_generator()
        uniforms = generator.uniforms(10_000)
        normals = generator.normals(10_000)
    """

    __slots__ = ("_config", "_map")

    def __init__(self, config: "ChaosConfig") -> None:
        """Initialize the generator.

        Args:
            config: The generator configuration.
        """
        self._config = config
        self._map: "ChaoticMap | None" = None

    @property
    def config(self) -> "ChaosConfig":
        """Return the generator configuration."""
        return self._config

    @property
    def chaotic_map(self) -> "ChaoticMap":
        """Return the configured map, built on first use."""
        if self._map is None:
            self._map = self._config.get_map()
        return self._map

    def orbit(self, length: int, *, stride: int | None = None) -> Orbit:
        """Return the configured orbit with ``length`` recorded values."""
        return orbit(self.chaotic_map, self._config.orbit_config(length, stride=stride))

    def uniforms(self, n: int, *, stride: int | None = None) -> UniformStream:
        """Return ``n`` uniformised orbit values."""
        if n == 0:
            return UniformStream(source=self.chaotic_map.name, law=self._config.get_law().name, values=np.empty(0))
        return uniformize(self.orbit(n, stride=stride), self._config.get_law())

    def sample(self, spec: "DistributionSpec", n: int) -> SampleBatch:
        """Return ``n`` samples of ``spec`` through the full pipeline."""
        return sample_law(self.uniforms(n), spec, n)

    def normals(self, n: int) -> SampleBatch:
        """Return ``n`` standard normals from Box-Muller pairs.

        The uniforms are taken ``gaussian_stride`` iterates apart. The CDF
        transform conjugates the logistic map to the tent map, so uniforms of
        consecutive iterates are functionally dependent and would bend the
        Box-Muller output away from a normal law.
        """
        stream = self.uniforms(n + n % 2, stride=self._config.gaussian_stride)
        batch = gaussian_pairs(stream)
        batch.values = batch.values[:n]
        return batch

    def multivariate(self, marginals: "Sequence[DistributionSpec]", n: int) -> SampleBatch:
        """Return ``n`` vectors with independent coordinates and the given marginals."""
        return multivariate_sample(
            self._config.seed,
            marginals,
            n,
            self.chaotic_map,
            burn_in=self._config.burn_in,
            stride=self._config.stride,
            reseed_policy=self._config.reseed_policy,
        )
