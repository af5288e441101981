from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any, Literal

from chaosrng.exceptions import ConfigurationError
from chaosrng.utils.seeding import MASK64

if TYPE_CHECKING:
    from chaosrng.maps.base import ChaoticMap
    from chaosrng.measures.laws import InvariantLaw
    from chaosrng.sampling.service import ChaosGenerator

__all__ = (
    "OUTPUT_DIR_ENV",
    "ChaosConfig",
    "GbmConfig",
    "OrbitConfig",
    "ReseedPolicy",
    "ThresholdConfig",
)

ReseedPolicy = Literal["halt", "perturb"]
"""Action taken when an orbit reaches a degenerate state."""

OUTPUT_DIR_ENV = "CHAOSRNG_OUTPUT_DIR"
"""Environment variable holding the default output directory of the command line."""

_RESEED_POLICIES = ("halt", "perturb")


def _check_seed(seed: int, name: str = "seed") -> None:
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed <= MASK64:
        msg = f"{name} must be an unsigned 64-bit integer, got {seed!r}"
        raise ConfigurationError(msg)


@dataclass(slots=True, frozen=True)
class OrbitConfig:
    """Configuration of a single orbit.

    The initial condition is derived from ``seed``. The orbit is advanced
    ``burn_in`` times, then ``stride`` steps per recorded value until
    ``length`` values are collected.

    Example:
        A short logistic orbit::

            config = OrbitConfig(seed=7, burn_in=1000, length=10_000)
            values = orbit(LogisticMap(), config).values

        Keep every 4th iterate to thin serial dependence::

            config = OrbitConfig(seed=7, length=10_000, stride=4)
    """

    seed: int
    burn_in: int = 0
    length: int = 1
    stride: int = 1
    reseed_policy: ReseedPolicy = "perturb"

    def __post_init__(self) -> None:
        _check_seed(self.seed)
        if self.length < 1:
            msg = f"length must be at least 1, got {self.length!r}"
            raise ConfigurationError(msg)
        if self.stride < 1:
            msg = f"stride must be at least 1, got {self.stride!r}"
            raise ConfigurationError(msg)
        if self.burn_in < 0:
            msg = f"burn_in must be non-negative, got {self.burn_in!r}"
            raise ConfigurationError(msg)
        if self.reseed_policy not in _RESEED_POLICIES:
            msg = f"reseed_policy must be one of {list(_RESEED_POLICIES)}, got {self.reseed_policy!r}"
            raise ConfigurationError(msg)

    @property
    def total_steps(self) -> int:
        """Number of map applications needed to produce the orbit."""
        return self.burn_in + self.length * self.stride


@dataclass(slots=True, frozen=True)
class GbmConfig:
    """Configuration of a geometric Brownian motion simulation.

    Example::

        config = GbmConfig(s0=100.0, mu=0.05, sigma=0.2, horizon=1.0, steps=252, n_paths=10_000)
    """

    s0: float = 100.0
    mu: float = 0.05
    sigma: float = 0.2
    horizon: float = 1.0
    steps: int = 252
    n_paths: int = 1_000
    master_seed: int = 0
    burn_in: int = 1_000
    stride: int = 16
    """Orbit stride between consecutive uniforms fed to Box-Muller."""

    def __post_init__(self) -> None:
        _check_seed(self.master_seed, "master_seed")
        if not self.s0 > 0.0:
            msg = f"s0 must be positive, got {self.s0!r}"
            raise ConfigurationError(msg)
        if not self.sigma >= 0.0:
            msg = f"sigma must be non-negative, got {self.sigma!r}"
            raise ConfigurationError(msg)
        if not self.horizon > 0.0:
            msg = f"horizon must be positive, got {self.horizon!r}"
            raise ConfigurationError(msg)
        if self.steps < 1 or self.n_paths < 1:
            msg = f"steps and n_paths must be at least 1, got steps={self.steps!r}, n_paths={self.n_paths!r}"
            raise ConfigurationError(msg)
        if self.burn_in < 0 or self.stride < 1:
            msg = f"burn_in must be >= 0 and stride >= 1, got burn_in={self.burn_in!r}, stride={self.stride!r}"
            raise ConfigurationError(msg)

    @property
    def dt(self) -> float:
        """Length of one time step."""
        return self.horizon / self.steps


@dataclass(slots=True, frozen=True)
class ThresholdConfig:
    """Pass thresholds for the statistical battery.

    Chaotic streams are serially dependent, so classical critical values do
    not apply. The defaults are calibrated against streams of 10**5 values.

    Example:
        Loosen the Kolmogorov-Smirnov threshold for short streams::

            thresholds = ThresholdConfig(ks=0.05)
    """

    ks: float = 0.02
    chi2_per_bin: tuple[float, float] = (0.5, 2.0)
    acf: float = 0.02
    jb_per_10k: float = 10.0
    jb_floor: float = 10.0
    mean: float | None = None
    """Largest accepted |mean - reference|; None uses the tolerance of the reference law."""
    variance: tuple[float, float] = (0.98, 1.02)
    """Accepted ratio of sample variance to the reference variance."""
    skewness: float = 0.05
    kurtosis: float = 0.1

    def __post_init__(self) -> None:
        low, high = self.chi2_per_bin
        v_low, v_high = self.variance
        if not (0.0 <= low <= high and 0.0 < v_low <= v_high):
            msg = "Interval thresholds must be ordered as (low, high)"
            raise ConfigurationError(msg)
        for name in ("ks", "acf", "jb_per_10k", "jb_floor", "mean", "skewness", "kurtosis"):
            value = getattr(self, name)
            if value is not None and value < 0.0:
                msg = f"Threshold {name} must be non-negative"
                raise ConfigurationError(msg)

    def jarque_bera(self, n: int) -> float:
        """Return the Jarque-Bera threshold for a sample of size ``n``.

        The statistic grows linearly in ``n`` for any fixed moment bias, so
        the threshold is scaled from its value per 10**4 samples.
        """
        return max(self.jb_floor, self.jb_per_10k * n / 10_000)


@dataclass(slots=True)
class ChaosConfig:
    """Top-level configuration of the generator.

    Example:
        Default logistic generator::

            config = ChaosConfig(seed=7)
            generator = config.get_generator()
            batch = generator.sample(get_distribution("exponential", rate=1.0), 10_000)

        Chebyshev map of degree 3 with a longer burn-in::

            config = ChaosConfig(map="chebyshev", params={"k": 3}, burn_in=5_000)
    """

    map: str = "logistic"
    params: dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    burn_in: int = 1_000
    stride: int = 1
    reseed_policy: ReseedPolicy = "perturb"
    gaussian_stride: int = 16
    """Stride used for the uniforms that feed Box-Muller pairs."""
    thresholds: ThresholdConfig = field(default_factory=ThresholdConfig)

    def __post_init__(self) -> None:
        # raises for invalid seed, burn-in, stride or policy
        self.orbit_config(1)
        if self.gaussian_stride < 1:
            msg = f"gaussian_stride must be at least 1, got {self.gaussian_stride!r}"
            raise ConfigurationError(msg)

    def orbit_config(self, length: int, *, seed: int | None = None, stride: int | None = None) -> OrbitConfig:
        """Return the orbit configuration for ``length`` recorded values.

        Args:
            length: Number of recorded values.
            seed: Optional seed override, used for derived per-coordinate seeds.
            stride: Optional stride override.

        Returns:
            An :class:`OrbitConfig`.
        """
        return OrbitConfig(
            seed=self.seed if seed is None else seed,
            burn_in=self.burn_in,
            length=length,
            stride=self.stride if stride is None else stride,
            reseed_policy=self.reseed_policy,
        )

    def get_map(self) -> "ChaoticMap":
        """Return the configured map instance.

        Raises:
            ConfigurationError: If the map name or a parameter is unknown.
        """
        from chaosrng.maps import get_map

        return get_map(self.map, **self.params)

    def get_law(self) -> "InvariantLaw":
        """Return the invariant law of the configured map.

        Raises:
            UnsupportedMapError: If the map has no closed-form invariant law.
        """
        from chaosrng.measures.laws import get_law

        return get_law(self.get_map())

    def get_generator(self) -> "ChaosGenerator":
        """Return a :class:`~chaosrng.sampling.service.ChaosGenerator` for this configuration."""
        from chaosrng.sampling.service import ChaosGenerator

        return ChaosGenerator(self)
