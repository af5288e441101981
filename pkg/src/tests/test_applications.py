"""Tests for chaos-driven geometric Brownian motion."""

import math

import pytest


def test_chaotic_normals_match_gaussian_pairs() -> None:
    """Test that each row equals the Box-Muller pairs of its seed's orbit."""
    import numpy as np

    from chaosrng.applications import chaotic_normals
    from chaosrng.config import OrbitConfig
    from chaosrng.dynamics import orbit
    from chaosrng.maps import LogisticMap
    from chaosrng.sampling.transforms import gaussian_pairs, uniformize

    seeds = [3, 11]
    normals = chaotic_normals(seeds, 9, burn_in=100, stride=16)
    assert normals.shape == (2, 9)
    for row, seed in zip(normals, seeds, strict=True):
        source = orbit(LogisticMap(), OrbitConfig(seed=seed, burn_in=100, length=10, stride=16))
        expected = gaussian_pairs(uniformize(source)).values[:9]
        np.testing.assert_allclose(row, expected, rtol=1e-12)


def test_gbm_without_volatility_is_deterministic() -> None:
    """Test that sigma = 0 reproduces the exponential drift exactly."""
    import numpy as np

    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig

    config = GbmConfig(s0=50.0, mu=0.1, sigma=0.0, horizon=2.0, steps=8, n_paths=3)
    result = gbm_paths(config)
    assert result.times == pytest.approx(np.linspace(0.0, 2.0, 9))
    for path in result.paths:
        assert path == pytest.approx(50.0 * np.exp(0.1 * result.times), rel=1e-15)
    summary = result.summary()
    assert summary["mean_ratio"] == pytest.approx(1.0)
    assert summary["variance_ratio"] is None


def test_gbm_paths_are_positive_and_start_at_s0() -> None:
    """Test the shape, starting value and positivity of simulated paths."""
    import numpy as np

    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig

    result = gbm_paths(GbmConfig(sigma=0.8, steps=50, n_paths=20))
    assert result.paths.shape == (20, 51)
    assert result.n_paths == 20
    assert np.all(result.paths[:, 0] == 100.0)
    assert np.all(result.paths > 0.0)
    assert result.terminal.shape == (20,)
    assert result.log_returns() == pytest.approx(np.log(result.paths[:, -1] / 100.0))


def test_gbm_path_depends_only_on_its_index() -> None:
    """Test that adding paths leaves the earlier ones unchanged."""
    import numpy as np

    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig

    small = gbm_paths(GbmConfig(steps=20, n_paths=3, master_seed=9))
    large = gbm_paths(GbmConfig(steps=20, n_paths=5, master_seed=9))
    other = gbm_paths(GbmConfig(steps=20, n_paths=3, master_seed=10))
    assert np.array_equal(small.paths, large.paths[:3])
    assert not np.array_equal(small.paths, other.paths)


def test_standardized_increments_recover_the_drivers() -> None:
    """Test that the increments invert the lognormal step."""
    from chaosrng.applications import chaotic_normals, gbm_paths
    from chaosrng.config import GbmConfig
    from chaosrng.utils.seeding import derive_seed

    config = GbmConfig(steps=12, n_paths=2, master_seed=4)
    increments = gbm_paths(config).standardized_increments()
    seeds = [derive_seed(4, i) for i in range(2)]
    drivers = chaotic_normals(seeds, 12, burn_in=config.burn_in, stride=config.stride)
    assert increments == pytest.approx(drivers.ravel(), abs=1e-9)


def test_standardized_increments_need_volatility() -> None:
    """Test that deterministic paths have no Gaussian drivers to recover."""
    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig
    from chaosrng.exceptions import ZeroVarianceError

    with pytest.raises(ZeroVarianceError):
        gbm_paths(GbmConfig(sigma=0.0, steps=4, n_paths=2)).standardized_increments()


def test_gbm_config_validation() -> None:
    """Test rejected simulation parameters."""
    from chaosrng.config import GbmConfig
    from chaosrng.exceptions import ConfigurationError

    for kwargs in ({"s0": 0.0}, {"sigma": -0.1}, {"horizon": 0.0}, {"steps": 0}, {"n_paths": 0}, {"stride": 0}):
        with pytest.raises(ConfigurationError):
            GbmConfig(**kwargs)  # type: ignore[arg-type]
    assert GbmConfig(horizon=2.0, steps=8).dt == 0.25


def test_normality_report_passes_on_increments() -> None:
    """Test the normality checks on about 10**5 standardised increments."""
    from chaosrng.applications import gbm_paths, normality_report
    from chaosrng.config import GbmConfig
    from chaosrng.stattests import all_passed

    increments = gbm_paths(GbmConfig(n_paths=400, steps=252, master_seed=1)).standardized_increments()
    reports = normality_report(increments)
    assert [report.test for report in reports] == ["mean", "variance", "skewness", "kurtosis", "ks", "jb"]
    assert all_passed(reports), [report for report in reports if not report.passed]


def test_normality_report_errors() -> None:
    """Test short and constant inputs."""
    import numpy as np

    from chaosrng.applications import normality_report
    from chaosrng.exceptions import InsufficientDataError, ZeroVarianceError

    with pytest.raises(InsufficientDataError):
        normality_report(np.zeros(999))
    with pytest.raises(ZeroVarianceError):
        normality_report(np.zeros(1_000))


@pytest.mark.slow
def test_gbm_matches_lognormal_moments() -> None:
    """Test the terminal mean and log-return variance against their closed forms."""
    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig

    config = GbmConfig(mu=0.05, sigma=0.2, horizon=1.0, steps=50, n_paths=20_000)
    summary = gbm_paths(config).summary()
    assert summary["expected_mean_terminal"] == pytest.approx(100.0 * math.exp(0.05))
    assert summary["expected_log_return_variance"] == pytest.approx(0.04)
    assert summary["mean_ratio"] == pytest.approx(1.0, abs=0.01)
    assert summary["variance_ratio"] == pytest.approx(1.0, abs=0.05)


@pytest.mark.slow
def test_gbm_full_year_of_daily_steps() -> None:
    """Test 100 000 paths of 252 daily steps against the lognormal moments."""
    import numpy as np

    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig

    path_set = gbm_paths(GbmConfig(mu=0.05, sigma=0.2, horizon=1.0, steps=252, n_paths=100_000))
    assert np.all(np.isfinite(path_set.paths))
    summary = path_set.summary()
    assert 0.98 <= summary["mean_ratio"] <= 1.02
    assert 0.98 <= summary["variance_ratio"] <= 1.02


def test_path_rows() -> None:
    """Test the long-format rows of a path set."""
    from chaosrng.applications import gbm_paths
    from chaosrng.config import GbmConfig

    rows = list(gbm_paths(GbmConfig(sigma=0.0, steps=2, n_paths=2)).rows())
    assert len(rows) == 6
    assert rows[0] == (0.0, 0, 100.0)
    assert rows[3][:2] == (0.0, 1)
