"""Frobenius-Perron residuals of invariant densities.

A density is invariant when it is a fixed point of the transfer operator,
``sum_{x in T^-1(y)} rho(x) / |T'(x)| = rho(y)``. The residual of that
identity is checked pointwise.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from chaosrng.exceptions import DomainError, SingularPointError, UnsupportedMapError
from chaosrng.maps.base import Map1D
from chaosrng.maps.gauss import DEFAULT_TRUNCATION

if TYPE_CHECKING:
    from chaosrng.maps.base import ChaoticMap
    from chaosrng.measures.laws import InvariantLaw

__all__ = (
    "EXACT_HEAD_TERMS",
    "SINGULAR_DERIVATIVE",
    "FPCheck",
    "fp_check",
    "fp_residual",
    "fp_residual_grid",
)

SINGULAR_DERIVATIVE = 1e-9
"""Preimages with ``|T'|`` below this value make the transfer sum singular."""

EXACT_HEAD_TERMS = 32
"""Branches summed term by term before the closed-form Gauss tail in exact mode."""

_LN2 = math.log(2.0)


@dataclass(slots=True, frozen=True)
class FPCheck:
    """Outcome of one Frobenius-Perron evaluation.

    ``tail_bound`` is the mass of the branches left out of a truncated sum,
    and 0 when every branch is accounted for.
    """

    y: float
    transfer: float
    density: float
    residual: float
    tail_bound: float = 0.0
    terms: int = 0


def _transfer_terms(chaotic_map: Map1D, law: "InvariantLaw", preimages: Sequence[float]) -> float:
    total = 0.0
    for x in preimages:
        slope = abs(chaotic_map.derivative(x))
        if slope < SINGULAR_DERIVATIVE:
            msg = f"|T'| vanishes at the preimage {x!r} of the {chaotic_map.name} map"
            raise SingularPointError(msg)
        total += float(law.density(x)) / slope
    return total


def fp_check(chaotic_map: "ChaoticMap", law: "InvariantLaw", y: float, truncation: int | None = None) -> FPCheck:
    """Evaluate the transfer sum at ``y`` and compare it with the density.

    Args:
        chaotic_map: Interval map with a preimage oracle.
        law: Candidate invariant law.
        y: Point of the support.
        truncation: For the Gauss map, the number of branches summed. ``0``
            selects the exact mode: the first branches are summed term by
            term and the remainder by its telescoping closed form
            ``1 / (ln 2 (y + P + 1))``. ``None`` uses the default truncation.

    Raises:
        UnsupportedMapError: If the map has no preimage oracle.
        DomainError: If ``y`` is outside the support.
        SingularPointError: If ``|T'|`` vanishes at a preimage of ``y``.

    Returns:
        The :class:`FPCheck`.
    """
    if not isinstance(chaotic_map, Map1D):
        msg = f"The {chaotic_map.name} map has no one-dimensional transfer operator"
        raise UnsupportedMapError(msg)
    low, high = law.support
    if not low <= y <= high:
        msg = f"y must lie in the support [{low}, {high}], got {y!r}"
        raise DomainError(msg)

    density = float(law.density(y))
    if chaotic_map.unresolved_interval(truncation or DEFAULT_TRUNCATION) is None:
        transfer = _transfer_terms(chaotic_map, law, chaotic_map.preimages(y, truncation))
        return FPCheck(y=y, transfer=transfer, density=density, residual=abs(transfer - density))

    if y >= 1.0:
        msg = f"y must lie in [0, 1) for the {chaotic_map.name} map, got {y!r}"
        raise DomainError(msg)
    if truncation == 0:
        head = _transfer_terms(chaotic_map, law, chaotic_map.preimages(y, EXACT_HEAD_TERMS))
        transfer = head + 1.0 / (_LN2 * (y + EXACT_HEAD_TERMS + 1))
        return FPCheck(
            y=y, transfer=transfer, density=density, residual=abs(transfer - density), terms=EXACT_HEAD_TERMS
        )

    branches = truncation or DEFAULT_TRUNCATION
    transfer = _transfer_terms(chaotic_map, law, chaotic_map.preimages(y, branches))
    return FPCheck(
        y=y,
        transfer=transfer,
        density=density,
        residual=abs(transfer - density),
        tail_bound=1.0 / (_LN2 * (y + branches + 1)),
        terms=branches,
    )


def fp_residual(chaotic_map: "ChaoticMap", law: "InvariantLaw", y: float, truncation: int | None = None) -> float:
    """Return ``|sum rho(x) / |T'(x)| - rho(y)|`` over the preimages of ``y``.

    See :func:`fp_check` for the arguments and the Gauss truncation modes.

    Example::

        fp_residual(LogisticMap(), LOGISTIC_LAW, 0.5)  # below 1e-12
    """
    return fp_check(chaotic_map, law, y, truncation).residual


def fp_residual_grid(
    chaotic_map: "ChaoticMap", law: "InvariantLaw", points: int = 1_000, truncation: int | None = None
) -> "np.ndarray":
    """Return residuals on ``points`` interior points of the support.

    The grid is equally spaced and excludes the support endpoints.
    """
    low, high = law.support
    grid = np.linspace(low, high, points + 2)[1:-1]
    return np.array([fp_residual(chaotic_map, law, float(y), truncation) for y in grid])
