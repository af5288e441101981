"""Command line for generation, verification and the experiments.

Exit codes are a stable contract: 0 on success, 1 for usage errors, 2 for
numerical failures and 3 when a verification or test battery fails. Every
artifact has a fixed name inside the output directory, so identical flags
reproduce byte-identical files.
"""

import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

import click

from chaosrng.__metadata__ import __version__
from chaosrng.applications import gbm_paths, normality_report
from chaosrng.attractor import box_counting_dimension, empirical_density_2d, henon_cloud
from chaosrng.config import OUTPUT_DIR_ENV, ChaosConfig, GbmConfig
from chaosrng.exceptions import ChaosError, ConfigurationError, NumericalError, VerificationError, ZeroVarianceError
from chaosrng.io import provenance, read_column, write_csv, write_json
from chaosrng.maps import get_map, list_maps
from chaosrng.sampling.distributions import get_distribution, list_distributions
from chaosrng.stattests import BATTERY_TESTS, DEFAULT_TESTS, REFERENCE_LAWS, all_passed, battery_csv, run_battery
from chaosrng.verification import SUITES, VerificationSettings, run_verification

__all__ = (
    "EXIT_NUMERICAL",
    "EXIT_USAGE",
    "EXIT_VERIFICATION",
    "RunConfig",
    "main",
)

logger = logging.getLogger(__name__)

EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VERIFICATION = 3

_FORMATS = ("csv", "json")


def exit_code_for(error: BaseException) -> int:
    """Return the exit code for an error raised by a subcommand."""
    if isinstance(error, VerificationError):
        return EXIT_VERIFICATION
    if isinstance(error, (NumericalError, ZeroVarianceError)):
        return EXIT_NUMERICAL
    return EXIT_USAGE


class ChaosGroup(click.Group):
    """Click group translating package errors into the exit-code contract."""

    def main(self, args: Any = None, prog_name: str | None = None, **extra: Any) -> Any:  # type: ignore[override]
        extra.pop("standalone_mode", None)
        try:
            result = super().main(args, prog_name, standalone_mode=False, **extra)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_USAGE)
        except click.Abort:
            click.echo("Aborted!", err=True)
            sys.exit(EXIT_USAGE)
        except ChaosError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(exit_code_for(e))
        if isinstance(result, int) and result:
            sys.exit(result)
        return result


@dataclass(slots=True)
class RunConfig:
    """Resolved flags of one subcommand, echoed into its JSON artifacts."""

    subcommand: str
    output_dir: Path
    map: str | None = None
    params: dict[str, float] = field(default_factory=dict)
    seed: int | None = None
    n: int | None = None
    burn_in: int | None = None
    stride: int | None = None
    bins: int | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.format not in _FORMATS:
            msg = f"format must be one of {list(_FORMATS)}, got {self.format!r}"
            raise ConfigurationError(msg)
        if self.n is not None and self.n < 0:
            msg = f"--n must be non-negative, got {self.n!r}"
            raise ConfigurationError(msg)

    def path(self, name: str) -> Path:
        return self.output_dir / name

    def provenance(self, **extra: Any) -> dict[str, Any]:
        flags = {key: value for key, value in asdict(self).items() if value is not None and key != "output_dir"}
        return provenance(**flags, **extra)


def _parse_params(pairs: tuple[str, ...]) -> dict[str, float]:
    params: dict[str, float] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        if not sep or not key:
            msg = f"--param expects key=value, got {pair!r}"
            raise ConfigurationError(msg)
        try:
            params[key] = int(raw)
        except ValueError:
            try:
                params[key] = float(raw)
            except ValueError:
                msg = f"--param {key} must be numeric, got {raw!r}"
                raise ConfigurationError(msg) from None
    return params


def _parse_list(value: str, allowed: tuple[str, ...], flag: str) -> list[str]:
    names = [name.strip() for name in value.split(",") if name.strip()]
    unknown = [name for name in names if name not in allowed]
    if unknown or not names:
        msg = f"{flag} accepts a comma-separated subset of {list(allowed)}, got {value!r}"
        raise ConfigurationError(msg)
    return names


def _settings(ctx: click.Context) -> dict[str, Any]:
    return ctx.ensure_object(dict)


class _EchoHandler(logging.Handler):
    """Write records through click so they follow the current stderr."""

    def emit(self, record: logging.LogRecord) -> None:
        try:
            click.echo(self.format(record), err=True)
        except Exception:  # noqa: BLE001
            self.handleError(record)


def _configure_logging(level: str) -> None:
    package_logger = logging.getLogger("chaosrng")
    for handler in [h for h in package_logger.handlers if isinstance(h, _EchoHandler)]:
        package_logger.removeHandler(handler)
    handler = _EchoHandler()
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger.addHandler(handler)
    package_logger.setLevel(level.upper())


def _echo_written(*paths: Path) -> None:
    for path in paths:
        click.echo(str(path))


map_option = click.option(
    "--map", "map_name", type=click.Choice(list_maps()), default="logistic", show_default=True, help="Chaotic map."
)
param_option = click.option("--param", "params", multiple=True, metavar="KEY=VALUE", help="Map parameter, repeatable.")
seed_option = click.option("--seed", type=click.IntRange(0, 2**64 - 1), default=0, show_default=True)
burn_in_option = click.option("--burn-in", type=click.IntRange(min=0), default=1_000, show_default=True)


@click.group(cls=ChaosGroup)
@click.version_option(__version__, prog_name="chaosrng")
@click.option(
    "--output-dir",
    type=click.Path(file_okay=False, path_type=Path),
    envvar=OUTPUT_DIR_ENV,
    default=Path("."),
    show_default=True,
    help=f"Directory for artifacts (env: {OUTPUT_DIR_ENV}).",
)
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default="WARNING",
    show_default=True,
)
@click.pass_context
def main(ctx: click.Context, output_dir: Path, log_level: str) -> None:
    """Deterministic-chaos random generation and its numerical verification."""
    _configure_logging(log_level)
    _settings(ctx)["output_dir"] = output_dir


@main.command()
@map_option
@param_option
@click.option("--law", type=click.Choice(list_distributions()), default="uniform", show_default=True)
@click.option("--rate", type=float, help="exponential rate.")
@click.option("--mu", type=float, help="normal mean.")
@click.option("--sigma", type=float, help="normal standard deviation.")
@click.option("--p", type=float, help="bernoulli success probability.")
@click.option("--low", type=float, help="uniform lower bound.")
@click.option("--high", type=float, help="uniform upper bound.")
@click.option("--n", type=click.IntRange(min=0), default=1_000, show_default=True)
@seed_option
@burn_in_option
@click.option("--stride", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--reseed-policy", type=click.Choice(["perturb", "halt"]), default="perturb", show_default=True)
@click.option("--format", "fmt", type=click.Choice(_FORMATS), default="csv", show_default=True)
@click.pass_context
def generate(
    ctx: click.Context,
    map_name: str,
    params: tuple[str, ...],
    law: str,
    n: int,
    seed: int,
    burn_in: int,
    stride: int,
    reseed_policy: str,
    fmt: str,
    **law_params: float | None,
) -> None:
    """Sample a target law from a chaotic orbit."""
    run = RunConfig(
        "generate",
        _settings(ctx)["output_dir"],
        map=map_name,
        params=_parse_params(params),
        seed=seed,
        n=n,
        burn_in=burn_in,
        stride=stride,
        format=fmt,
    )
    spec = get_distribution(law, **{key: value for key, value in law_params.items() if value is not None})
    config = ChaosConfig(
        map=map_name,
        params=run.params,
        seed=seed,
        burn_in=burn_in,
        stride=stride,
        reseed_policy=reseed_policy,  # type: ignore[arg-type]
    )
    batch = config.get_generator().sample(spec, n)
    record = run.provenance(law=spec.describe(), reseed_policy=reseed_policy, orbit=batch.provenance)
    if fmt == "csv":
        written = write_csv(run.path("samples.csv"), ("index", "value"), enumerate(batch.values.tolist()))
    else:
        written = write_json(run.path("samples.json"), {"provenance": record, "values": batch.values})
    _echo_written(written)


@main.command()
@click.option("--suite", default=",".join(SUITES), show_default=True, help="Comma-separated suites.")
@map_option
@param_option
@click.option("--n", type=click.IntRange(min=1), default=1_000_000, show_default=True)
@seed_option
@burn_in_option
@click.pass_context
def verify(
    ctx: click.Context, suite: str, map_name: str, params: tuple[str, ...], n: int, seed: int, burn_in: int
) -> None:
    """Run verification suites and write verify.json; exit 3 on failure."""
    suites = _parse_list(suite, SUITES, "--suite")
    run = RunConfig(
        "verify",
        _settings(ctx)["output_dir"],
        map=map_name,
        params=_parse_params(params),
        seed=seed,
        n=n,
        burn_in=burn_in,
    )
    chaotic_map = get_map(map_name, **run.params)
    report = run_verification(chaotic_map, suites, VerificationSettings(n=n, seed=seed, burn_in=burn_in))
    payload = {
        "provenance": run.provenance(suites=suites),
        "passed": report.passed,
        "failed": report.failed(),
        "checks": report.checks,
    }
    _echo_written(write_json(run.path("verify.json"), payload))
    report.raise_for_failures()


@main.command()
@click.option("--a", type=float, default=1.4, show_default=True)
@click.option("--b", type=float, default=0.3, show_default=True)
@click.option("--n", type=click.IntRange(min=1), default=100_000, show_default=True)
@seed_option
@burn_in_option
@click.option("--dimension", is_flag=True, help="Fit the box-counting dimension.")
@click.option("--k-min", type=click.IntRange(min=0), default=2, show_default=True)
@click.option("--k-max", type=click.IntRange(min=1), default=10, show_default=True)
@click.option("--grid", type=click.IntRange(min=0), default=0, help="Also write an occupancy grid of this size.")
@click.pass_context
def henon(
    ctx: click.Context,
    a: float,
    b: float,
    n: int,
    seed: int,
    burn_in: int,
    dimension: bool,
    k_min: int,
    k_max: int,
    grid: int,
) -> None:
    """Sample the Hénon attractor; optionally fit its box-counting dimension."""
    run = RunConfig(
        "henon", _settings(ctx)["output_dir"], map="henon", params={"a": a, "b": b}, seed=seed, n=n, burn_in=burn_in
    )
    cloud = henon_cloud(a, b, seed, burn_in, n)
    written = [write_csv(run.path("henon_cloud.csv"), ("x", "y"), cloud.points.tolist())]
    if grid:
        density = empirical_density_2d(cloud, (grid, grid))
        written.append(write_csv(run.path("henon_density.csv"), ("ix", "iy", "mass"), density.rows()))
    if dimension:
        fit = box_counting_dimension(cloud, k_min, k_max)
        payload = {"provenance": run.provenance(k_min=k_min, k_max=k_max), "fit": fit}
        written.append(write_json(run.path("henon_dimension.json"), payload))
    _echo_written(*written)


@main.command()
@click.option("--s0", type=float, default=100.0, show_default=True)
@click.option("--mu", type=float, default=0.05, show_default=True)
@click.option("--sigma", type=float, default=0.2, show_default=True)
@click.option("--t", "horizon", type=float, default=1.0, show_default=True)
@click.option("--steps", type=click.IntRange(min=1), default=252, show_default=True)
@click.option("--paths", "n_paths", type=click.IntRange(min=1), default=1_000, show_default=True)
@seed_option
@click.pass_context
def gbm(
    ctx: click.Context, s0: float, mu: float, sigma: float, horizon: float, steps: int, n_paths: int, seed: int
) -> None:
    """Simulate geometric Brownian motion paths driven by chaotic normals."""
    config = GbmConfig(s0=s0, mu=mu, sigma=sigma, horizon=horizon, steps=steps, n_paths=n_paths, master_seed=seed)
    run = RunConfig("gbm", _settings(ctx)["output_dir"], map="logistic", seed=seed, n=n_paths)
    paths = gbm_paths(config)
    summary: dict[str, Any] = {"provenance": run.provenance(gbm=asdict(config)), **paths.summary()}
    increments = n_paths * steps
    if sigma > 0.0 and increments >= 1_000:
        reports = normality_report(paths.standardized_increments())
        summary["normality"] = {"passed": all_passed(reports), "reports": reports}
    written_paths = write_csv(run.path("gbm_paths.csv"), ("time", "path_id", "price"), paths.rows())
    _echo_written(written_paths, write_json(run.path("gbm_summary.json"), summary))


@main.command("test")
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@click.option("--tests", default=None, help="Comma-separated tests; defaults depend on --cdf.")
@click.option("--cdf", type=click.Choice(sorted(REFERENCE_LAWS)), default="uniform", show_default=True)
@click.option("--bins", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--lag", type=click.IntRange(min=0), default=1, show_default=True)
@click.pass_context
def battery(ctx: click.Context, input_path: Path, tests: str | None, cdf: str, bins: int, lag: int) -> None:
    """Run the statistical battery on a sample file; exit 3 on failure."""
    names = _parse_list(tests, BATTERY_TESTS, "--tests") if tests else list(DEFAULT_TESTS[cdf])
    samples = read_column(input_path)
    run = RunConfig("test", _settings(ctx)["output_dir"], n=len(samples), bins=bins)
    reports = run_battery(samples, names, cdf=cdf, bins=bins, lag=lag)
    passed = all_passed(reports)
    payload = {
        "provenance": run.provenance(input=input_path.name, tests=names, cdf=cdf, lag=lag),
        "passed": passed,
        "reports": reports,
    }
    _echo_written(write_json(run.path("tests.json"), payload), battery_csv(run.path("tests.csv"), reports))
    if not passed:
        failed = [report.test for report in reports if not report.passed]
        msg = f"Statistical battery failed: {', '.join(failed)}"
        raise VerificationError(msg, failed)
