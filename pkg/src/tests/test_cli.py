"""Tests for the command line."""

from pathlib import Path
from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from click.testing import CliRunner, Result


def _invoke(runner: "CliRunner", output_dir: Path, *args: str) -> "Result":
    from chaosrng.cli import main

    return runner.invoke(main, ["--output-dir", str(output_dir), *args])


def test_generate_csv(runner: "CliRunner", tmp_path: Path) -> None:
    """Test that generate writes an index/value CSV."""
    result = _invoke(runner, tmp_path, "generate", "--n", "100", "--seed", "3")
    assert result.exit_code == 0, result.output
    lines = (tmp_path / "samples.csv").read_text().splitlines()
    assert lines[0] == "index,value"
    assert len(lines) == 101
    assert lines[1].startswith("0,")
    assert all(0.0 <= float(line.split(",")[1]) <= 1.0 for line in lines[1:])


def test_generate_json(runner: "CliRunner", tmp_path: Path) -> None:
    """Test that the JSON output carries its provenance."""
    import json

    from chaosrng.__metadata__ import __version__

    result = _invoke(
        runner, tmp_path, "generate", "--law", "exponential", "--rate", "2", "--n", "50", "--format", "json"
    )
    assert result.exit_code == 0, result.output
    payload = json.loads((tmp_path / "samples.json").read_text())
    assert len(payload["values"]) == 50
    assert min(payload["values"]) >= 0.0
    record = payload["provenance"]
    assert record["version"] == __version__
    assert record["subcommand"] == "generate"
    assert record["map"] == "logistic"
    assert record["law"]["name"] == "exponential"
    assert list(payload) == sorted(payload)


def test_generate_is_reproducible(runner: "CliRunner", tmp_path: Path) -> None:
    """Test that identical flags produce byte-identical artifacts."""
    args = ("generate", "--law", "normal", "--n", "200", "--seed", "17", "--format", "json")
    assert _invoke(runner, tmp_path / "first", *args).exit_code == 0
    assert _invoke(runner, tmp_path / "second", *args).exit_code == 0
    first = (tmp_path / "first" / "samples.json").read_bytes()
    assert first == (tmp_path / "second" / "samples.json").read_bytes()
    assert _invoke(runner, tmp_path / "third", *args[:-4], "--seed", "18", "--format", "json").exit_code == 0
    assert first != (tmp_path / "third" / "samples.json").read_bytes()


@pytest.mark.parametrize(
    ("args", "code"),
    [
        (("generate", "--map", "henon", "--n", "10"), 1),
        (("generate", "--law", "exponential", "--rate=-1"), 1),
        (("generate", "--param", "lam=5"), 1),
        (("generate", "--param", "lam"), 1),
        (("generate", "--law", "cauchy"), 1),
        (("henon", "--a", "3.0", "--n", "100"), 2),
        (("verify", "--suite", "fp", "--map", "henon"), 1),
        (("verify", "--suite", "fp,spectral"), 1),
        (("henon", "--n", "1000", "--dimension"), 1),
    ],
)
def test_exit_codes(runner: "CliRunner", tmp_path: Path, args: tuple[str, ...], code: int) -> None:
    """Test the exit code of usage and numerical failures."""
    result = _invoke(runner, tmp_path, *args)
    assert result.exit_code == code, result.output


def test_exit_code_for() -> None:
    """Test the mapping from package errors to exit codes."""
    from chaosrng.cli import EXIT_NUMERICAL, EXIT_USAGE, EXIT_VERIFICATION, exit_code_for
    from chaosrng.exceptions import (
        ConfigurationError,
        DegenerateOrbitError,
        DivergenceError,
        UnsupportedMapError,
        VerificationError,
        ZeroVarianceError,
    )

    assert exit_code_for(ConfigurationError("bad flag")) == EXIT_USAGE
    assert exit_code_for(UnsupportedMapError("planar")) == EXIT_USAGE
    assert exit_code_for(DivergenceError("escaped")) == EXIT_NUMERICAL
    assert exit_code_for(DegenerateOrbitError("stuck", 3, 0.0)) == EXIT_NUMERICAL
    assert exit_code_for(ZeroVarianceError("constant")) == EXIT_NUMERICAL
    assert exit_code_for(VerificationError("failed", ["fp:max_residual"])) == EXIT_VERIFICATION


def test_verify_fp(runner: "CliRunner", tmp_path: Path) -> None:
    """Test a passing verification run and its report."""
    import json

    result = _invoke(runner, tmp_path, "verify", "--suite", "fp", "--map", "gauss")
    assert result.exit_code == 0, result.output
    payload = json.loads((tmp_path / "verify.json").read_text())
    assert payload["passed"] is True
    assert payload["failed"] == []
    assert payload["checks"][0]["suite"] == "fp"
    assert payload["provenance"]["suites"] == ["fp"]


def test_verify_failure_exits_3(runner: "CliRunner", tmp_path: Path) -> None:
    """Test that failed checks are written and then reported by exit code 3."""
    import json

    result = _invoke(runner, tmp_path, "verify", "--suite", "sensitivity", "--param", "lam=2.5")
    assert result.exit_code == 3
    payload = json.loads((tmp_path / "verify.json").read_text())
    assert payload["passed"] is False
    assert "sensitivity:mean_exponent" in payload["failed"]


def test_henon_cloud_and_grid(runner: "CliRunner", tmp_path: Path) -> None:
    """Test the Hénon point cloud and occupancy grid files."""
    result = _invoke(runner, tmp_path, "henon", "--n", "5000", "--grid", "8")
    assert result.exit_code == 0, result.output
    cloud = (tmp_path / "henon_cloud.csv").read_text().splitlines()
    assert cloud[0] == "x,y"
    assert len(cloud) == 5001
    grid = (tmp_path / "henon_density.csv").read_text().splitlines()
    assert grid[0] == "ix,iy,mass"
    assert len(grid) == 65
    assert sum(float(line.split(",")[2]) for line in grid[1:]) == pytest.approx(1.0)
    assert not (tmp_path / "henon_dimension.json").exists()


@pytest.mark.slow
def test_henon_dimension(runner: "CliRunner", tmp_path: Path) -> None:
    """Test the box-counting fit written by the henon command."""
    import json

    result = _invoke(runner, tmp_path, "henon", "--n", "1000000", "--dimension")
    assert result.exit_code == 0, result.output
    payload = json.loads((tmp_path / "henon_dimension.json").read_text())
    assert payload["fit"]["slope"] == pytest.approx(1.26, abs=0.05)
    assert payload["provenance"]["k_max"] == 10


def test_gbm_without_volatility(runner: "CliRunner", tmp_path: Path) -> None:
    """Test the gbm artifacts for deterministic paths."""
    import json

    result = _invoke(runner, tmp_path, "gbm", "--sigma", "0", "--paths", "2", "--steps", "5")
    assert result.exit_code == 0, result.output
    rows = (tmp_path / "gbm_paths.csv").read_text().splitlines()
    assert rows[0] == "time,path_id,price"
    assert len(rows) == 13
    summary = json.loads((tmp_path / "gbm_summary.json").read_text())
    assert summary["mean_ratio"] == pytest.approx(1.0)
    assert "normality" not in summary
    assert summary["provenance"]["gbm"]["sigma"] == 0.0


def test_gbm_reports_normality(runner: "CliRunner", tmp_path: Path) -> None:
    """Test that enough increments add a normality section."""
    import json

    result = _invoke(runner, tmp_path, "gbm", "--paths", "10", "--steps", "100")
    assert result.exit_code == 0, result.output
    summary = json.loads((tmp_path / "gbm_summary.json").read_text())
    tests = [report["test"] for report in summary["normality"]["reports"]]
    assert tests == ["mean", "variance", "skewness", "kurtosis", "ks", "jb"]


def test_battery_on_generated_samples(runner: "CliRunner", tmp_path: Path) -> None:
    """Test the battery on a file written by generate."""
    import json

    assert _invoke(runner, tmp_path, "generate", "--n", "100000", "--seed", "5").exit_code == 0
    result = _invoke(runner, tmp_path, "test", "--input", str(tmp_path / "samples.csv"), "--tests", "ks,moments")
    assert result.exit_code == 0, result.output
    payload = json.loads((tmp_path / "tests.json").read_text())
    assert payload["passed"] is True
    assert payload["provenance"]["tests"] == ["ks", "moments"]
    assert payload["provenance"]["n"] == 100_000
    assert (tmp_path / "tests.csv").read_text().startswith("test,statistic,lower,threshold,passed,n\n")


def test_battery_outcomes(runner: "CliRunner", tmp_path: Path) -> None:
    """Test passing, failing, degenerate and misconfigured battery runs."""
    from chaosrng.io import write_csv

    grid = write_csv(tmp_path / "grid.csv", ("value",), [((i + 0.5) / 10_000,) for i in range(10_000)])
    constant = write_csv(tmp_path / "constant.csv", ("value",), [(0.5,)] * 1_000)

    assert _invoke(runner, tmp_path, "test", "--input", str(grid), "--tests", "ks").exit_code == 0
    assert _invoke(runner, tmp_path, "test", "--input", str(constant), "--tests", "ks").exit_code == 3
    assert _invoke(runner, tmp_path, "test", "--input", str(constant)).exit_code == 2
    assert _invoke(runner, tmp_path, "test", "--input", str(grid), "--tests", "ks,spectral").exit_code == 1
    assert _invoke(runner, tmp_path, "test", "--input", str(tmp_path / "missing.csv")).exit_code == 1


def test_output_dir_from_environment(runner: "CliRunner", tmp_path: Path) -> None:
    """Test that the output directory can come from the environment."""
    from chaosrng.cli import main
    from chaosrng.config import OUTPUT_DIR_ENV

    result = runner.invoke(main, ["generate", "--n", "10"], env={OUTPUT_DIR_ENV: str(tmp_path / "env")})
    assert result.exit_code == 0, result.output
    assert (tmp_path / "env" / "samples.csv").exists()


def test_version(runner: "CliRunner") -> None:
    """Test the version flag."""
    from chaosrng.__metadata__ import __version__
    from chaosrng.cli import main

    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output
