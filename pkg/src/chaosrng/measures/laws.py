"""Closed-form invariant laws of the interval maps.

Densities are evaluated on the open support and return 0 at the endpoints.
CDFs and quantiles are closed forms; quadrature is used only for
expectations of observables and as an independent check in tests.
"""

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import integrate

from chaosrng.exceptions import UnsupportedMapError
from chaosrng.utils.numeric import as_result, ensure_in_interval

if TYPE_CHECKING:
    import numpy.typing as npt

    from chaosrng.maps.base import ChaoticMap
    from chaosrng.utils.numeric import FloatOrArray

__all__ = (
    "CHEBYSHEV_LAW",
    "GAUSS_LAW",
    "LOGISTIC_LAW",
    "UNIFORM_LAW",
    "InvariantLaw",
    "chebyshev_cdf",
    "chebyshev_density",
    "chebyshev_quantile",
    "gauss_cdf",
    "gauss_density",
    "gauss_quantile",
    "get_law",
    "logistic_cdf",
    "logistic_density",
    "logistic_quantile",
    "uniform_cdf",
    "uniform_density",
    "uniform_quantile",
)

_LN2 = math.log(2.0)

LawFunction = Callable[["npt.ArrayLike"], "FloatOrArray"]


def logistic_density(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``1 / (pi sqrt(x (1 - x)))`` on ``(0, 1)`` and 0 elsewhere.

    Args:
        x: Scalar or array of finite values.

    Returns:
        The density, with the same shape as ``x``.
    """
    x = np.asarray(x, dtype=np.float64)
    inside = (x > 0.0) & (x < 1.0)
    safe = np.where(inside, x, 0.5)
    return as_result(np.where(inside, 1.0 / (math.pi * np.sqrt(safe * (1.0 - safe))), 0.0))


def logistic_cdf(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``(2 / pi) arcsin(sqrt(x))``.

    Raises:
        DomainError: If any value is outside ``[0, 1]``.
    """
    x = ensure_in_interval(x, 0.0, 1.0, "x")
    return as_result(2.0 / math.pi * np.arcsin(np.sqrt(x)))


def logistic_quantile(u: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``sin(pi u / 2) ** 2``, the inverse of :func:`logistic_cdf`.

    Raises:
        DomainError: If any value is outside ``[0, 1]``.
    """
    u = ensure_in_interval(u, 0.0, 1.0, "u")
    return as_result(np.sin(math.pi * u / 2.0) ** 2)


def gauss_density(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``1 / (ln 2 (1 + x))`` on ``[0, 1]``.

    Raises:
        DomainError: If any value is outside ``[0, 1]``.
    """
    x = ensure_in_interval(x, 0.0, 1.0, "x")
    return as_result(1.0 / (_LN2 * (1.0 + x)))


def gauss_cdf(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``log2(1 + x)``.

    Raises:
        DomainError: If any value is outside ``[0, 1]``.
    """
    x = ensure_in_interval(x, 0.0, 1.0, "x")
    return as_result(np.log1p(x) / _LN2)


def gauss_quantile(u: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``2 ** u - 1``, the inverse of :func:`gauss_cdf`.

    Raises:
        DomainError: If any value is outside ``[0, 1]``.
    """
    u = ensure_in_interval(u, 0.0, 1.0, "u")
    return as_result(np.minimum(np.expm1(u * _LN2), 1.0))


def uniform_density(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return 1 on ``[0, 1]`` and 0 elsewhere (invariant density of the tent map)."""
    x = np.asarray(x, dtype=np.float64)
    return as_result(np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0))


def uniform_cdf(x: "npt.ArrayLike") -> "FloatOrArray":
    x = ensure_in_interval(x, 0.0, 1.0, "x")
    return as_result(x)


def uniform_quantile(u: "npt.ArrayLike") -> "FloatOrArray":
    u = ensure_in_interval(u, 0.0, 1.0, "u")
    return as_result(u)


def chebyshev_density(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``1 / (pi sqrt(1 - x^2))`` on ``(-1, 1)`` and 0 elsewhere.

    The same arcsine law is invariant for every degree ``k``.
    """
    x = np.asarray(x, dtype=np.float64)
    inside = (x > -1.0) & (x < 1.0)
    safe = np.where(inside, x, 0.0)
    return as_result(np.where(inside, 1.0 / (math.pi * np.sqrt((1.0 - safe) * (1.0 + safe))), 0.0))


def chebyshev_cdf(x: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``1 - arccos(x) / pi``.

    Raises:
        DomainError: If any value is outside ``[-1, 1]``.
    """
    x = ensure_in_interval(x, -1.0, 1.0, "x")
    return as_result(1.0 - np.arccos(x) / math.pi)


def chebyshev_quantile(u: "npt.ArrayLike") -> "FloatOrArray":
    """Return ``-cos(pi u)``, the inverse of :func:`chebyshev_cdf`.

    Raises:
        DomainError: If any value is outside ``[0, 1]``.
    """
    u = ensure_in_interval(u, 0.0, 1.0, "u")
    return as_result(-np.cos(math.pi * u))


@dataclass(slots=True, frozen=True)
class InvariantLaw:
    """Density, CDF and quantile of an invariant probability measure.

    Example:
        Uniformise a single logistic iterate::

            LOGISTIC_LAW.cdf(0.25)  # 1/3
    """

    name: str
    support: tuple[float, float]
    density: LawFunction
    cdf: LawFunction
    quantile: LawFunction

    def contains(self, values: "npt.ArrayLike") -> bool:
        """Return True if every value lies in the closed support."""
        array = np.asarray(values, dtype=np.float64)
        low, high = self.support
        return bool(np.all((array >= low) & (array <= high)))

    def mass(self, low: float, high: float) -> float:
        """Return the measure of ``[low, high]`` clipped to the support."""
        s_low, s_high = self.support
        low, high = max(low, s_low), min(high, s_high)
        if high <= low:
            return 0.0
        return float(self.cdf(high)) - float(self.cdf(low))

    def expectation(
        self,
        f: Callable[[float], float],
        breakpoints: Sequence[float] = (),
        tolerance: float = 1e-9,
    ) -> float:
        """Integrate ``f`` against the law by adaptive quadrature.

        The integral of ``f * density`` is computed in the quantile variable,
        ``int_0^1 f(F^-1(u)) du``, which removes the endpoint singularities
        of the arcsine densities.

        Args:
            f: Scalar observable.
            breakpoints: Points of the support where ``f`` is discontinuous.
            tolerance: Absolute quadrature tolerance.

        Returns:
            The expectation of ``f``.
        """
        low, high = self.support
        points = sorted({float(self.cdf(p)) for p in breakpoints if low < p < high})
        value, _ = integrate.quad(
            lambda u: float(f(float(self.quantile(u)))),
            0.0,
            1.0,
            points=points or None,
            epsabs=tolerance,
            epsrel=tolerance,
            limit=200,
        )
        return float(value)


LOGISTIC_LAW = InvariantLaw("arcsine", (0.0, 1.0), logistic_density, logistic_cdf, logistic_quantile)
GAUSS_LAW = InvariantLaw("gauss", (0.0, 1.0), gauss_density, gauss_cdf, gauss_quantile)
UNIFORM_LAW = InvariantLaw("uniform", (0.0, 1.0), uniform_density, uniform_cdf, uniform_quantile)
CHEBYSHEV_LAW = InvariantLaw("chebyshev-arcsine", (-1.0, 1.0), chebyshev_density, chebyshev_cdf, chebyshev_quantile)


def get_law(chaotic_map: "ChaoticMap") -> InvariantLaw:
    """Return the closed-form invariant law of a map.

    Args:
        chaotic_map: A map from the catalog.

    Raises:
        UnsupportedMapError: For the Hénon map, and for the logistic map away
            from ``lam = 4`` where no absolutely continuous law is known.

    Returns:
        The :class:`InvariantLaw`.
    """
    name = chaotic_map.name
    if name == "logistic":
        if chaotic_map.params["lam"] != 4.0:
            msg = f"No closed-form invariant law for the logistic map at lam={chaotic_map.params['lam']!r}"
            raise UnsupportedMapError(msg)
        return LOGISTIC_LAW
    if name == "gauss":
        return GAUSS_LAW
    if name == "tent":
        return UNIFORM_LAW
    if name == "chebyshev":
        return CHEBYSHEV_LAW
    msg = f"The {name} map has no closed-form invariant density"
    raise UnsupportedMapError(msg)
