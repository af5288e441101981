"""Statistical battery for generated streams.

Chaotic streams are serially dependent, so the tests report raw statistics
and compare them with configurable thresholds (:class:`ThresholdConfig`)
instead of classical p-values.
"""

import os
from collections.abc import Callable, Sequence
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Any, ClassVar

import numpy as np
from scipy import special

from chaosrng.config import ThresholdConfig
from chaosrng.exceptions import ConfigurationError, DomainError, InsufficientDataError, ZeroVarianceError
from chaosrng.io import write_csv

if TYPE_CHECKING:
    import numpy.typing as npt
    from typing_extensions import Self

    from chaosrng.utils.numeric import FloatArray

__all__ = (
    "BATTERY_TESTS",
    "DEFAULT_TESTS",
    "REFERENCE_LAWS",
    "Moments",
    "TestReport",
    "all_passed",
    "autocorrelation",
    "battery_csv",
    "chi_square_uniform",
    "jarque_bera",
    "ks_statistic",
    "moments",
    "run_battery",
)

BATTERY_TESTS = ("ks", "chi2", "acf", "jb", "moments")

# jb measures departure from normality and always rejects a uniform stream
DEFAULT_TESTS: dict[str, tuple[str, ...]] = {
    "uniform": ("ks", "chi2", "acf", "moments"),
    "normal": BATTERY_TESTS,
}

CdfFunction = Callable[["FloatArray"], "npt.ArrayLike"]


@dataclass(slots=True, frozen=True)
class ReferenceLaw:
    """Target law of a battery run: its CDF and its first four moments."""

    cdf: CdfFunction
    mean: float
    variance: float
    skewness: float
    kurtosis: float
    mean_tolerance: float
    """Default bound on |mean - reference| for 10**5 samples."""


REFERENCE_LAWS: dict[str, ReferenceLaw] = {
    "uniform": ReferenceLaw(lambda x: np.clip(x, 0.0, 1.0), 0.5, 1.0 / 12.0, 0.0, -1.2, 0.005),
    "normal": ReferenceLaw(special.ndtr, 0.0, 1.0, 0.0, 0.0, 0.02),
}
"""Reference laws accepted by :func:`run_battery` by name."""


@dataclass(slots=True, frozen=True)
class TestReport:
    """Outcome of one check.

    One-sided checks pass when ``statistic <= threshold``. Two-sided checks
    also carry ``lower`` and pass when ``lower <= statistic <= threshold``.
    """

    __test__: ClassVar[bool] = False

    test: str
    statistic: float
    threshold: float
    passed: bool
    n: int
    lower: float | None = None
    params: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def check(
        cls,
        test: str,
        statistic: float,
        threshold: float,
        n: int,
        *,
        lower: float | None = None,
        **params: Any,
    ) -> "Self":
        """Build a report whose ``passed`` flag follows from the bounds."""
        passed = statistic <= threshold and (lower is None or statistic >= lower)
        return cls(test, float(statistic), float(threshold), bool(passed), n, lower, params)


def _as_sample(samples: "npt.ArrayLike", minimum: int = 1) -> "FloatArray":
    values = np.asarray(samples, dtype=np.float64).ravel()
    if len(values) < minimum:
        msg = f"Need at least {minimum} samples, got {len(values)}"
        raise InsufficientDataError(msg)
    return values


def ks_statistic(samples: "npt.ArrayLike", cdf: CdfFunction) -> float:
    """Return the Kolmogorov-Smirnov distance between a sample and a CDF.

    The statistic is the largest of ``i/n - F(x_i)`` and ``F(x_i) - (i-1)/n``
    over the sorted sample.

    Raises:
        InsufficientDataError: If the sample is empty.
    """
    values = np.sort(_as_sample(samples))
    n = len(values)
    expected = np.asarray(cdf(values), dtype=np.float64)
    ranks = np.arange(1, n + 1, dtype=np.float64)
    return float(max(np.max(ranks / n - expected), np.max(expected - (ranks - 1) / n)))


def chi_square_uniform(samples: "npt.ArrayLike", bins: int = 100) -> float:
    """Return Pearson's statistic for uniformity over ``bins`` equal cells of ``[0, 1]``.

    Raises:
        InsufficientDataError: If there are fewer than ``5 * bins`` samples.
        DomainError: If a sample lies outside ``[0, 1]``.
    """
    if bins < 1:
        msg = f"bins must be at least 1, got {bins!r}"
        raise DomainError(msg)
    values = _as_sample(samples, 5 * bins)
    if not np.all((values >= 0.0) & (values <= 1.0)):
        msg = "chi_square_uniform expects samples in [0, 1]"
        raise DomainError(msg)
    observed, _ = np.histogram(values, bins=bins, range=(0.0, 1.0))
    expected = len(values) / bins
    return float(np.sum((observed - expected) ** 2) / expected)


def _centered(values: "FloatArray") -> tuple["FloatArray", float]:
    centered = values - values.mean()
    m2 = float(np.mean(centered**2))
    if m2 == 0.0:
        msg = "Sample has zero variance"
        raise ZeroVarianceError(msg)
    return centered, m2


def autocorrelation(samples: "npt.ArrayLike", lag: int = 1) -> float:
    """Return the sample autocorrelation at ``lag``, normalised by ``n``.

    Raises:
        InsufficientDataError: If ``lag`` is negative or not below ``n``.
        ZeroVarianceError: If the sample is constant.
    """
    values = _as_sample(samples)
    if not 0 <= lag < len(values):
        msg = f"lag must satisfy 0 <= lag < n = {len(values)}, got {lag!r}"
        raise InsufficientDataError(msg)
    centered, m2 = _centered(values)
    if lag == 0:
        return 1.0
    covariance = float(np.dot(centered[:-lag], centered[lag:])) / len(values)
    return covariance / m2


def _shape(values: "FloatArray") -> tuple[float, float]:
    centered, m2 = _centered(values)
    skewness = float(np.mean(centered**3)) / m2**1.5
    kurtosis = float(np.mean(centered**4)) / m2**2 - 3.0
    return skewness, kurtosis


def jarque_bera(samples: "npt.ArrayLike") -> float:
    """Return ``n / 6 * (S**2 + K**2 / 4)`` with skewness ``S`` and excess kurtosis ``K``.

    Raises:
        InsufficientDataError: If there are fewer than 8 samples.
        ZeroVarianceError: If the sample is constant.
    """
    values = _as_sample(samples, 8)
    skewness, kurtosis = _shape(values)
    return len(values) / 6.0 * (skewness**2 + kurtosis**2 / 4.0)


@dataclass(slots=True, frozen=True)
class Moments:
    """Sample moments. Skewness and kurtosis are None for a constant sample."""

    mean: float
    variance: float
    skewness: float | None
    kurtosis: float | None
    n: int

    @property
    def flagged(self) -> bool:
        return self.skewness is None


def moments(samples: "npt.ArrayLike") -> Moments:
    """Return mean, unbiased variance, skewness and excess kurtosis.

    Raises:
        InsufficientDataError: If there are fewer than 2 samples.
    """
    values = _as_sample(samples, 2)
    variance = float(np.var(values, ddof=1))
    if variance == 0.0:
        return Moments(float(values.mean()), 0.0, None, None, len(values))
    skewness, kurtosis = _shape(values)
    return Moments(float(values.mean()), variance, skewness, kurtosis, len(values))


def _moment_reports(values: "FloatArray", law: ReferenceLaw, thresholds: ThresholdConfig) -> list[TestReport]:
    summary = moments(values)
    if summary.skewness is None or summary.kurtosis is None:
        msg = "Sample has zero variance"
        raise ZeroVarianceError(msg)
    n = summary.n
    low, high = thresholds.variance
    mean_threshold = law.mean_tolerance if thresholds.mean is None else thresholds.mean
    return [
        TestReport.check("mean", abs(summary.mean - law.mean), mean_threshold, n, value=summary.mean),
        TestReport.check("variance", summary.variance / law.variance, high, n, lower=low, value=summary.variance),
        TestReport.check(
            "skewness", abs(summary.skewness - law.skewness), thresholds.skewness, n, value=summary.skewness
        ),
        TestReport.check(
            "kurtosis", abs(summary.kurtosis - law.kurtosis), thresholds.kurtosis, n, value=summary.kurtosis
        ),
    ]


def run_battery(
    samples: "npt.ArrayLike",
    tests: Sequence[str] | None = None,
    thresholds: ThresholdConfig | None = None,
    cdf: str = "uniform",
    *,
    bins: int = 100,
    lag: int = 1,
) -> list[TestReport]:
    """Run a named subset of the battery against a reference law.

    ``chi2`` bins the probability-integral transform ``F(x)`` of the
    samples, so it applies to any reference law. ``moments`` expands to
    mean, variance-ratio, skewness and kurtosis reports against the
    reference moments.

    Args:
        samples: The stream under test.
        tests: Names from ``ks``, ``chi2``, ``acf``, ``jb`` and ``moments``;
            defaults to :data:`DEFAULT_TESTS` for the reference law.
        thresholds: Pass thresholds; defaults when omitted.
        cdf: Reference law name from :data:`REFERENCE_LAWS`.
        bins: Cells for ``chi2``.
        lag: Lag for ``acf``.

    Raises:
        ConfigurationError: If a test or law name is unknown.

    Returns:
        Reports in the order requested.
    """
    thresholds = thresholds or ThresholdConfig()
    if cdf not in REFERENCE_LAWS:
        msg = f"Unknown reference law {cdf!r}. Available: {sorted(REFERENCE_LAWS)}"
        raise ConfigurationError(msg)
    if tests is None:
        tests = DEFAULT_TESTS[cdf]
    unknown = [name for name in tests if name not in BATTERY_TESTS]
    if unknown:
        msg = f"Unknown tests {unknown}. Available: {list(BATTERY_TESTS)}"
        raise ConfigurationError(msg)
    law = REFERENCE_LAWS[cdf]
    values = _as_sample(samples)
    n = len(values)

    reports: list[TestReport] = []
    for name in tests:
        if name == "ks":
            reports.append(TestReport.check("ks", ks_statistic(values, law.cdf), thresholds.ks, n, cdf=cdf))
        elif name == "chi2":
            statistic = chi_square_uniform(np.asarray(law.cdf(values), dtype=np.float64), bins)
            low, high = thresholds.chi2_per_bin
            reports.append(TestReport.check("chi2", statistic, high * bins, n, lower=low * bins, bins=bins))
        elif name == "acf":
            value = autocorrelation(values, lag)
            reports.append(TestReport.check("acf", abs(value), thresholds.acf, n, lag=lag, value=value))
        elif name == "jb":
            skewness, kurtosis = _shape(_as_sample(values, 8))
            statistic = jarque_bera(values)
            reports.append(
                TestReport.check(
                    "jb", statistic, thresholds.jarque_bera(n), n, skewness=skewness, kurtosis=kurtosis
                )
            )
        else:
            reports.extend(_moment_reports(values, law, thresholds))
    return reports


def all_passed(reports: Sequence[TestReport]) -> bool:
    return all(report.passed for report in reports)


def battery_csv(path: "str | os.PathLike[str]", reports: Sequence[TestReport]) -> Path:
    """Write the battery summary as ``test, statistic, lower, threshold, passed, n`` rows."""
    rows = [(r.test, r.statistic, r.lower, r.threshold, r.passed, r.n) for r in reports]
    return write_csv(path, ("test", "statistic", "lower", "threshold", "passed", "n"), rows)
