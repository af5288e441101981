"""Verification suites for the ergodic claims behind the generator.

Each suite runs a family of numerical checks against one map and returns
:class:`CheckResult` records with the measured value and the threshold it
was held to. The suites are:

``fp``
    Frobenius-Perron residual of the closed-form density on an interior grid.
``birkhoff``
    Orbit averages of interval indicators against quadrature references.
``density``
    L1 distance between the visit histogram and the discretised law.
``pushforward``
    Invariance of the discretised law and convergence of three initial
    histograms to it.
``sensitivity``
    Positive divergence exponent and separation of nearby orbits.
``transitivity``
    Grid coverage of a single long orbit.
"""

import itertools
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Any

import numpy as np

from chaosrng.config import OrbitConfig
from chaosrng.dynamics import Orbit, initial_state, orbit
from chaosrng.ergodics import (
    birkhoff_average,
    indicator,
    mean_divergence_exponent,
    sensitivity_divergence,
    sweep_seeds,
    transitivity_probe,
    visit_density,
)
from chaosrng.exceptions import ConfigurationError, UnsupportedMapError, VerificationError
from chaosrng.maps.base import Map1D, Map2D
from chaosrng.measures.histogram import (
    discretize_law,
    equal_mass_edges,
    iterate_pushforward,
    l1_distance,
    left_concentrated_histogram,
    pushforward,
    right_concentrated_histogram,
    uniform_edges,
    uniform_histogram,
)
from chaosrng.measures.laws import get_law
from chaosrng.measures.transfer import fp_residual_grid
from chaosrng.utils.seeding import derive_seed

if TYPE_CHECKING:
    from chaosrng.maps.base import ChaoticMap
    from chaosrng.measures.laws import InvariantLaw

__all__ = (
    "SUITES",
    "CheckResult",
    "VerificationReport",
    "VerificationSettings",
    "run_verification",
)

logger = logging.getLogger(__name__)

SUITES = ("fp", "birkhoff", "density", "pushforward", "sensitivity", "transitivity")


@dataclass(slots=True, frozen=True)
class VerificationSettings:
    """Sizes and tolerances of the verification suites."""

    n: int = 1_000_000
    seed: int = 0
    burn_in: int = 1_000
    fp_points: int = 1_000
    fp_tolerance: float = 1e-9
    half_tolerance: float = 0.01
    interval_tolerance: float = 0.02
    random_intervals: int = 10
    density_bins: int = 200
    density_tolerance: float = 0.05
    pushforward_bins: int = 200
    pushforward_iterations: int = 50
    pushforward_tolerance: float = 0.05
    fixed_point_tolerance: float = 0.01
    mass_tolerance: float = 1e-12
    sensitivity_seeds: int = 100
    epsilon: float = 1e-12
    separation_epsilon: float = 1e-10
    transitivity_bins: int = 100


@dataclass(slots=True, frozen=True)
class CheckResult:
    """One verification check. ``passed`` is the verdict on ``value`` against ``threshold``."""

    suite: str
    name: str
    value: float
    threshold: float
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)


@dataclass(slots=True)
class VerificationReport:
    map: str
    params: dict[str, float]
    settings: VerificationSettings
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def failed(self) -> list[str]:
        return [f"{check.suite}:{check.name}" for check in self.checks if not check.passed]

    def raise_for_failures(self) -> None:
        """Raise :class:`VerificationError` naming every failed check."""
        failed = self.failed()
        if failed:
            msg = f"{len(failed)} verification checks failed: {', '.join(failed)}"
            raise VerificationError(msg, failed)


class _Context:
    """Lazily computed inputs shared by the suites of one run."""

    __slots__ = ("_law", "_orbit", "chaotic_map", "settings")

    def __init__(self, chaotic_map: "ChaoticMap", settings: VerificationSettings) -> None:
        self.chaotic_map = chaotic_map
        self.settings = settings
        self._law: InvariantLaw | None = None
        self._orbit: Orbit | None = None

    @property
    def interval_map(self) -> Map1D:
        if not isinstance(self.chaotic_map, Map1D):
            msg = f"The {self.chaotic_map.name} map is planar; this suite needs an interval map"
            raise UnsupportedMapError(msg)
        return self.chaotic_map

    @property
    def law(self) -> "InvariantLaw":
        if self._law is None:
            self._law = get_law(self.interval_map)
        return self._law

    @property
    def orbit(self) -> Orbit:
        if self._orbit is None:
            settings = self.settings
            config = OrbitConfig(seed=settings.seed, burn_in=settings.burn_in, length=settings.n)
            self._orbit = orbit(self.interval_map, config)
        return self._orbit


def _check(
    suite: str, name: str, value: float, threshold: float, *, at_least: bool = False, **details: Any
) -> CheckResult:
    # at_least: pass when value >= threshold, otherwise when value < threshold
    passed = value >= threshold if at_least else value < threshold
    logger.info("%s/%s %s: %.6g (threshold %.3g)", suite, name, "passed" if passed else "FAILED", value, threshold)
    return CheckResult(suite, name, float(value), float(threshold), bool(passed), details)


def _fp(context: _Context) -> list[CheckResult]:
    settings = context.settings
    truncation = 0 if context.interval_map.unresolved_interval() is not None else None
    residuals = fp_residual_grid(context.interval_map, context.law, settings.fp_points, truncation)
    return [
        _check("fp", "max_residual", float(residuals.max()), settings.fp_tolerance, points=settings.fp_points)
    ]


def _birkhoff(context: _Context) -> list[CheckResult]:
    settings = context.settings
    low, high = context.interval_map.domain
    results = []
    half = birkhoff_average(context.orbit, indicator(low, (low + high) / 2.0), context.law)
    results.append(
        _check(
            "birkhoff",
            half.observable,
            half.abs_error,  # type: ignore[arg-type]
            settings.half_tolerance,
            time_average=half.time_average,
            reference=half.reference,
        )
    )
    rng = np.random.default_rng(settings.seed)
    for a, b in np.sort(rng.uniform(low, high, size=(settings.random_intervals, 2)), axis=1):
        report = birkhoff_average(context.orbit, indicator(float(a), float(b)), context.law)
        results.append(
            _check(
                "birkhoff",
                report.observable,
                report.abs_error,  # type: ignore[arg-type]
                settings.interval_tolerance,
                time_average=report.time_average,
                reference=report.reference,
            )
        )
    return results


def _density(context: _Context) -> list[CheckResult]:
    settings = context.settings
    edges = uniform_edges(settings.density_bins, context.interval_map.domain)
    empirical = visit_density(context.orbit, edges=edges)
    distance = l1_distance(empirical, discretize_law(context.law, edges=edges))
    return [_check("density", "l1_to_law", distance, settings.density_tolerance, bins=settings.density_bins)]


def _pushforward(context: _Context) -> list[CheckResult]:
    settings = context.settings
    chaotic_map = context.interval_map
    edges = equal_mass_edges(context.law, settings.pushforward_bins)
    target = discretize_law(context.law, edges=edges)
    starts = {
        "uniform": uniform_histogram(edges=edges),
        "left": left_concentrated_histogram(edges=edges),
        "right": right_concentrated_histogram(edges=edges),
    }
    finals = {}
    step_drift = 0.0
    for name, start in starts.items():
        sequence = iterate_pushforward(start, chaotic_map, settings.pushforward_iterations)
        totals = np.array([hist.total_mass for hist in sequence])
        step_drift = max(step_drift, float(np.abs(np.diff(totals)).max()))
        finals[name] = sequence[-1]

    fixed_point = l1_distance(pushforward(target, chaotic_map), target)
    tolerance = settings.pushforward_tolerance
    results = [
        _check("pushforward", "l1_law_fixed_point", fixed_point, settings.fixed_point_tolerance),
        *(
            _check("pushforward", f"l1_{name}_to_law", l1_distance(final, target), tolerance)
            for name, final in finals.items()
        ),
    ]
    results.extend(
        _check("pushforward", f"l1_{first}_{second}", l1_distance(finals[first], finals[second]), tolerance)
        for first, second in itertools.combinations(finals, 2)
    )
    results.append(
        _check(
            "pushforward",
            "mass_drift_per_step",
            step_drift,
            settings.mass_tolerance,
            iterations=settings.pushforward_iterations,
        )
    )
    return results


def _sensitivity(context: _Context) -> list[CheckResult]:
    settings = context.settings
    chaotic_map = context.chaotic_map
    planar = isinstance(chaotic_map, Map2D)
    burn_in = settings.burn_in if planar else 0
    horizon = 100 if planar else 60
    seeds = [derive_seed(settings.seed, i) for i in range(settings.sensitivity_seeds)]
    exponent = mean_divergence_exponent(chaotic_map, seeds, settings.epsilon, horizon, burn_in=burn_in)

    threshold = 0.1 * float(chaotic_map.diameter)  # type: ignore[attr-defined]

    def separation(seed: int) -> float:
        state = initial_state(chaotic_map, seed)
        for _ in range(burn_in):
            state = chaotic_map.advance(state)  # type: ignore[arg-type]
        profile = sensitivity_divergence(chaotic_map, state, settings.separation_epsilon, horizon if planar else 50)
        return float(profile.distances.max())

    smallest = min(sweep_seeds(separation, seeds))
    return [
        _check("sensitivity", "mean_exponent", exponent, 0.0, at_least=True, seeds=len(seeds), horizon=horizon),
        _check(
            "sensitivity",
            "min_max_separation",
            smallest,
            threshold,
            at_least=True,
            epsilon=settings.separation_epsilon,
        ),
    ]


def _transitivity(context: _Context) -> list[CheckResult]:
    settings = context.settings
    coverage = transitivity_probe(context.orbit, settings.transitivity_bins)
    return [_check("transitivity", "coverage", coverage, 1.0, at_least=True, bins=settings.transitivity_bins)]


_SUITE_RUNNERS: dict[str, Callable[[_Context], list[CheckResult]]] = {
    "fp": _fp,
    "birkhoff": _birkhoff,
    "density": _density,
    "pushforward": _pushforward,
    "sensitivity": _sensitivity,
    "transitivity": _transitivity,
}


def run_verification(
    chaotic_map: "ChaoticMap",
    suites: Sequence[str] = SUITES,
    settings: VerificationSettings | None = None,
) -> VerificationReport:
    """Run the named suites against a map.

    Args:
        chaotic_map: Map under test.
        suites: Suite names from :data:`SUITES`, run in order.
        settings: Sizes and tolerances; defaults when omitted.

    Raises:
        ConfigurationError: If a suite name is unknown.
        UnsupportedMapError: If a suite cannot run on the map, such as the
            density suites on the Hénon map.

    Returns:
        The :class:`VerificationReport`. Call
        :meth:`VerificationReport.raise_for_failures` to turn failed checks
        into a :class:`VerificationError`.
    """
    unknown = [name for name in suites if name not in _SUITE_RUNNERS]
    if unknown:
        msg = f"Unknown verification suites {unknown}. Available: {list(SUITES)}"
        raise ConfigurationError(msg)
    settings = settings or VerificationSettings()
    context = _Context(chaotic_map, settings)
    report = VerificationReport(map=chaotic_map.name, params=dict(chaotic_map.params), settings=settings)
    for name in suites:
        report.checks.extend(_SUITE_RUNNERS[name](context))
    logger.info("Verification of %s: %d checks, %d failed", chaotic_map.name, len(report.checks), len(report.failed()))
    return report

