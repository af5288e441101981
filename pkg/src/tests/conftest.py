from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from click.testing import CliRunner

    from chaosrng.dynamics import Orbit
    from chaosrng.maps import GaussMap, LogisticMap


@pytest.fixture
def logistic_map() -> "LogisticMap":
    """Return the fully chaotic logistic map."""
    from chaosrng.maps import LogisticMap

    return LogisticMap()


@pytest.fixture
def gauss_map() -> "GaussMap":
    """Return the Gauss map."""
    from chaosrng.maps import GaussMap

    return GaussMap()


@pytest.fixture(scope="session")
def logistic_orbit() -> "Orbit":
    """Return a logistic orbit of 10**6 values after a 1000 step burn-in."""
    from chaosrng.config import OrbitConfig
    from chaosrng.dynamics import orbit
    from chaosrng.maps import LogisticMap

    return orbit(LogisticMap(), OrbitConfig(seed=7, burn_in=1_000, length=1_000_000))


@pytest.fixture(scope="session")
def gauss_orbit() -> "Orbit":
    """Return a Gauss orbit of 10**6 values after a 1000 step burn-in."""
    from chaosrng.config import OrbitConfig
    from chaosrng.dynamics import orbit
    from chaosrng.maps import GaussMap

    return orbit(GaussMap(), OrbitConfig(seed=7, burn_in=1_000, length=1_000_000))


@pytest.fixture
def runner() -> "CliRunner":
    """Return a click test runner."""
    from click.testing import CliRunner

    return CliRunner()
