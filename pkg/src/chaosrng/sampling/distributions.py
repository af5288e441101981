"""Target distributions for inverse-transform sampling.

Built-in distributions are registered by short name, the same way maps are.
Every CDF and quantile is vectorised over numpy arrays.
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from inspect import signature
from typing import TYPE_CHECKING, Any, Literal

import numpy as np
from scipy import special

from chaosrng.exceptions import ConfigurationError, DomainError

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "DistributionSpec",
    "bernoulli",
    "continuous_spec",
    "discrete_spec",
    "exponential",
    "get_distribution",
    "list_distributions",
    "normal",
    "register_distribution",
    "uniform",
)

ArrayFunction = Callable[["npt.ArrayLike"], "npt.ArrayLike"]
DistributionFactory = Callable[..., "DistributionSpec"]

_PROBABILITY_TOLERANCE = 1e-12


@dataclass(slots=True, frozen=True)
class DistributionSpec:
    """A target law given by its CDF and, optionally, a closed-form quantile.

    Continuous specs carry ``cdf`` and ``support``. Discrete specs carry
    ordered ``atoms`` and their ``probs``; their CDF is derived.

    Example::

        spec = continuous_spec("pareto", lambda x: 1 - np.maximum(x, 1.0) ** -3, support=(1.0, math.inf))
    """

    name: str
    kind: Literal["continuous", "discrete"]
    support: tuple[float, float]
    cdf_function: "ArrayFunction | None" = None
    quantile: "ArrayFunction | None" = None
    atoms: tuple[float, ...] = ()
    probs: tuple[float, ...] = ()
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        low, high = self.support
        if not low < high and self.kind == "continuous":
            msg = f"Support bounds must satisfy low < high, got {self.support!r}"
            raise DomainError(msg)
        if self.kind == "continuous":
            if self.cdf_function is None:
                msg = f"Continuous distribution {self.name!r} needs a cdf"
                raise DomainError(msg)
            return
        if not self.atoms or len(self.atoms) != len(self.probs):
            msg = "A discrete distribution needs one probability per atom"
            raise DomainError(msg)
        atoms = np.asarray(self.atoms, dtype=np.float64)
        probs = np.asarray(self.probs, dtype=np.float64)
        if not np.all(np.isfinite(atoms)) or not np.all(np.diff(atoms) > 0.0):
            msg = "Discrete atoms must be finite and strictly increasing"
            raise DomainError(msg)
        if np.any(probs < 0.0) or abs(probs.sum() - 1.0) > _PROBABILITY_TOLERANCE:
            msg = f"Discrete probabilities must be non-negative and sum to 1, got {probs.sum()!r}"
            raise DomainError(msg)

    @property
    def is_discrete(self) -> bool:
        return self.kind == "discrete"

    def cumulative_probs(self) -> "FloatArray":
        """Return the cumulative probabilities of the atoms, the last forced to 1."""
        cumulative = np.cumsum(np.asarray(self.probs, dtype=np.float64))
        cumulative[-1] = 1.0
        return cumulative

    def cdf(self, x: "npt.ArrayLike") -> "FloatArray":
        """Evaluate the CDF element-wise."""
        x = np.asarray(x, dtype=np.float64)
        if self.is_discrete:
            index = np.searchsorted(np.asarray(self.atoms), x, side="right")
            return np.concatenate(([0.0], self.cumulative_probs()))[index]
        return np.asarray(self.cdf_function(x), dtype=np.float64)  # type: ignore[misc]

    def contains(self, values: "npt.ArrayLike") -> bool:
        """Return True if every value lies in the support."""
        array = np.asarray(values, dtype=np.float64)
        if self.is_discrete:
            return bool(np.all(np.isin(array, np.asarray(self.atoms))))
        low, high = self.support
        return bool(np.all((array >= low) & (array <= high)))

    def describe(self) -> dict[str, Any]:
        return {"name": self.name, "kind": self.kind, "params": dict(self.params)}


def continuous_spec(
    name: str,
    cdf: "ArrayFunction",
    support: tuple[float, float] = (-math.inf, math.inf),
    quantile: "ArrayFunction | None" = None,
    params: dict[str, float] | None = None,
) -> DistributionSpec:
    """Build a continuous distribution from a vectorised CDF.

    Without ``quantile`` the generalised inverse falls back to bisection.
    """
    return DistributionSpec(
        name=name, kind="continuous", support=support, cdf_function=cdf, quantile=quantile, params=params or {}
    )


def discrete_spec(
    atoms: Sequence[float],
    probs: Sequence[float],
    name: str = "discrete",
    params: dict[str, float] | None = None,
) -> DistributionSpec:
    """Build a discrete distribution from ordered atoms and their probabilities."""
    atoms = tuple(float(a) for a in atoms)
    return DistributionSpec(
        name=name,
        kind="discrete",
        support=(atoms[0], atoms[-1]) if atoms else (0.0, 0.0),
        atoms=atoms,
        probs=tuple(float(p) for p in probs),
        params=params or {},
    )


# Global registry of distribution short names to factories
_distribution_registry: dict[str, DistributionFactory] = {}


def register_distribution(name: str) -> Callable[[DistributionFactory], DistributionFactory]:
    """Decorator to register a distribution factory with a short name.

    Example::

        @register_distribution("pareto")
        def pareto(alpha: float = 3.0) -> DistributionSpec:
            ...
    """

    def decorator(factory: DistributionFactory) -> DistributionFactory:
        _distribution_registry[name] = factory
        return factory

    return decorator


def uniform(low: float = 0.0, high: float = 1.0) -> DistributionSpec:
    """Uniform law on ``[low, high]``."""
    if not (math.isfinite(low) and math.isfinite(high) and low < high):
        msg = f"uniform needs finite low < high, got low={low!r}, high={high!r}"
        raise DomainError(msg)
    width = high - low
    return continuous_spec(
        "uniform",
        lambda x: np.clip((np.asarray(x, dtype=np.float64) - low) / width, 0.0, 1.0),
        support=(low, high),
        quantile=lambda u: low + width * np.asarray(u, dtype=np.float64),
        params={"low": low, "high": high},
    )


def exponential(rate: float = 1.0) -> DistributionSpec:
    """Exponential law with the given rate."""
    if not (math.isfinite(rate) and rate > 0.0):
        msg = f"exponential needs rate > 0, got {rate!r}"
        raise DomainError(msg)
    return continuous_spec(
        "exponential",
        lambda x: -np.expm1(-rate * np.maximum(np.asarray(x, dtype=np.float64), 0.0)),
        support=(0.0, math.inf),
        quantile=lambda u: -np.log1p(-np.asarray(u, dtype=np.float64)) / rate + 0.0,
        params={"rate": rate},
    )


def normal(mu: float = 0.0, sigma: float = 1.0) -> DistributionSpec:
    """Normal law with mean ``mu`` and standard deviation ``sigma``."""
    if not (math.isfinite(mu) and math.isfinite(sigma) and sigma > 0.0):
        msg = f"normal needs finite mu and sigma > 0, got mu={mu!r}, sigma={sigma!r}"
        raise DomainError(msg)
    return continuous_spec(
        "normal",
        lambda x: special.ndtr((np.asarray(x, dtype=np.float64) - mu) / sigma),
        quantile=lambda u: mu + sigma * special.ndtri(np.asarray(u, dtype=np.float64)),
        params={"mu": mu, "sigma": sigma},
    )


def bernoulli(p: float = 0.5) -> DistributionSpec:
    """Bernoulli law on the atoms 0 and 1."""
    if not 0.0 <= p <= 1.0:
        msg = f"bernoulli needs p in [0, 1], got {p!r}"
        raise DomainError(msg)
    return discrete_spec((0.0, 1.0), (1.0 - p, p), name="bernoulli", params={"p": p})


@lru_cache(maxsize=1)
def _register_builtins() -> None:
    """Register built-in distributions."""
    _distribution_registry.setdefault("uniform", uniform)
    _distribution_registry.setdefault("exponential", exponential)
    _distribution_registry.setdefault("normal", normal)
    _distribution_registry.setdefault("bernoulli", bernoulli)


def get_distribution(name: str, **params: Any) -> DistributionSpec:
    """Build a registered distribution by name.

    Args:
        name: Registered short name.
        **params: Parameters of the factory, e.g. ``rate=2.0``.

    Raises:
        ConfigurationError: If the name or a parameter is unknown.

    Returns:
        The :class:`DistributionSpec`.
    """
    _register_builtins()
    if name not in _distribution_registry:
        msg = f"Unknown distribution: {name!r}. Available: {list(_distribution_registry.keys())}"
        raise ConfigurationError(msg)
    factory = _distribution_registry[name]
    accepted = set(signature(factory).parameters)
    unknown = sorted(set(params) - accepted)
    if unknown:
        msg = f"Distribution {name!r} does not accept parameters {unknown}. Accepted: {sorted(accepted)}"
        raise ConfigurationError(msg)
    return factory(**params)


def list_distributions() -> list[str]:
    """Return the registered distribution names."""
    _register_builtins()
    return list(_distribution_registry.keys())
