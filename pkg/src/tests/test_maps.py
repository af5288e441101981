"""Tests for the map catalog."""

import math

import pytest


def test_step_logistic_known_values() -> None:
    """Test the logistic step on hand-computed points."""
    from chaosrng.maps.logistic import step_logistic

    assert step_logistic(0.5) == 1.0
    assert step_logistic(0.2) == pytest.approx(0.64)
    assert step_logistic(1.0) == 0.0
    assert step_logistic(0.5, lam=2.0) == 0.5


@pytest.mark.parametrize(("x", "lam"), [(1.5, 4.0), (-0.1, 4.0), (0.5, 4.5), (0.5, -1.0)])
def test_step_logistic_rejects_out_of_range(x: float, lam: float) -> None:
    """Test that the logistic step rejects states and parameters outside their ranges."""
    from chaosrng.exceptions import DomainError
    from chaosrng.maps.logistic import step_logistic

    with pytest.raises(DomainError):
        step_logistic(x, lam)


def test_logistic_stays_in_unit_interval() -> None:
    """Test that the array step never leaves [0, 1]."""
    import numpy as np

    from chaosrng.maps import LogisticMap

    x = np.linspace(0.0, 1.0, 10_001)
    image = LogisticMap().advance_array(x)
    assert image.min() >= 0.0
    assert image.max() <= 1.0


def test_logistic_degenerate_states() -> None:
    """Test that the endpoints and the repelling fixed point are degenerate."""
    import numpy as np

    from chaosrng.maps import LogisticMap

    chaotic_map = LogisticMap()
    assert chaotic_map.can_degenerate
    for x in (0.0, 1.0, 0.75):
        assert chaotic_map.is_degenerate(x)
    assert not chaotic_map.is_degenerate(0.3)
    assert not chaotic_map.is_degenerate(5e-324)
    mask = chaotic_map.degenerate_mask(np.array([0.0, 0.25, 0.75, 1.0, 0.5]))
    assert mask.tolist() == [True, False, True, True, False]

    # attracting fixed points stay regular states
    assert not LogisticMap(2.5).is_degenerate(0.6)
    assert LogisticMap(2.5).is_degenerate(0.0)
    assert not LogisticMap(0.5).is_degenerate(0.0)
    assert not LogisticMap(0.5).degenerate_mask(np.zeros(3)).any()


def test_step_gauss_known_values() -> None:
    """Test the Gauss step, including the fixed point 0 and the golden mean."""
    from chaosrng.maps.gauss import step_gauss

    golden = (math.sqrt(5.0) - 1.0) / 2.0
    assert step_gauss(0.0) == 0.0
    assert step_gauss(1.0) == 0.0
    assert step_gauss(0.3) == pytest.approx(1.0 / 0.3 - 3.0)
    assert step_gauss(golden) == pytest.approx(golden, abs=1e-12)


def test_gauss_degeneracy_threshold(gauss_map: "object") -> None:
    """Test that states below the threshold are reported as degenerate."""
    from chaosrng.maps.gauss import DEGENERACY_THRESHOLD

    assert gauss_map.is_degenerate(0.0)  # type: ignore[attr-defined]
    assert gauss_map.is_degenerate(DEGENERACY_THRESHOLD / 2)  # type: ignore[attr-defined]
    assert not gauss_map.is_degenerate(1e-6)  # type: ignore[attr-defined]


def test_step_tent_known_values() -> None:
    """Test the tent step on dyadic points."""
    from chaosrng.maps.tent import step_tent

    assert step_tent(0.5) == 1.0
    assert step_tent(0.25) == 0.5
    assert step_tent(0.75) == 0.5
    assert step_tent(1.0) == 0.0


def test_step_chebyshev_known_values() -> None:
    """Test the Chebyshev step against the polynomial 2x^2 - 1."""
    from chaosrng.maps.chebyshev import step_chebyshev

    for x in (-0.9, -0.3, 0.0, 0.5, 0.8):
        assert step_chebyshev(x, 2) == pytest.approx(2 * x * x - 1, abs=1e-14)
    assert step_chebyshev(0.3, 3) == pytest.approx(4 * 0.3**3 - 3 * 0.3, abs=1e-14)
    assert step_chebyshev(1.0, 5) == pytest.approx(1.0)


def test_step_chebyshev_rejects_low_degree() -> None:
    """Test that degree 1 is rejected."""
    from chaosrng.exceptions import DomainError
    from chaosrng.maps.chebyshev import step_chebyshev

    with pytest.raises(DomainError):
        step_chebyshev(0.5, 1)


def test_chebyshev_map_accepts_integral_float() -> None:
    """Test that ChebyshevMap normalises an integral float degree."""
    from chaosrng.maps import ChebyshevMap

    assert ChebyshevMap(3.0).k == 3  # type: ignore[arg-type]


def test_chebyshev_derivative_matches_difference_quotient() -> None:
    """Test the Chebyshev derivative in the interior and at the endpoints."""
    from chaosrng.maps import ChebyshevMap

    chaotic_map = ChebyshevMap(3)
    h = 1e-7
    x = 0.3
    numeric = (chaotic_map.advance(x + h) - chaotic_map.advance(x - h)) / (2 * h)
    assert chaotic_map.derivative(x) == pytest.approx(numeric, rel=1e-6)
    assert chaotic_map.derivative(1.0) == 9.0
    assert chaotic_map.derivative(-1.0) == pytest.approx(9.0)


def test_step_henon_known_values() -> None:
    """Test the Hénon step at the origin."""
    from chaosrng.maps.henon import step_henon

    assert step_henon(0.0, 0.0) == (1.0, 0.0)
    assert step_henon(1.0, 0.5) == pytest.approx((0.1, 0.3))


def test_step_henon_errors() -> None:
    """Test that non-finite input and overflowing output raise."""
    from chaosrng.exceptions import DivergenceError, DomainError
    from chaosrng.maps.henon import step_henon

    with pytest.raises(DomainError):
        step_henon(math.nan, 0.0)
    with pytest.raises(DivergenceError):
        step_henon(1e200, 0.0)


def test_logistic_preimages() -> None:
    """Test both roots and the double root at the maximum."""
    from chaosrng.maps.logistic import logistic_preimages, step_logistic

    assert logistic_preimages(0.75) == pytest.approx([0.25, 0.75])
    assert logistic_preimages(1.0) == [0.5]
    for y in (0.001, 0.3, 0.999):
        for x in logistic_preimages(y):
            assert step_logistic(x) == pytest.approx(y, abs=1e-12)


def test_gauss_preimages() -> None:
    """Test the first branches of the Gauss preimage set."""
    from chaosrng.exceptions import DomainError
    from chaosrng.maps.gauss import gauss_preimages

    assert gauss_preimages(0.5, 3) == pytest.approx([1 / 1.5, 1 / 2.5, 1 / 3.5])
    with pytest.raises(DomainError):
        gauss_preimages(1.0)
    with pytest.raises(DomainError):
        gauss_preimages(0.5, 0)


def test_tent_preimages() -> None:
    """Test the tent preimages, including the single preimage of 1."""
    from chaosrng.maps import TentMap

    assert TentMap().preimages(0.5) == [0.25, 0.75]
    assert TentMap().preimages(1.0) == [0.5]


def test_chebyshev_preimages_map_back() -> None:
    """Test that every Chebyshev preimage maps back onto y."""
    from chaosrng.maps import ChebyshevMap

    chaotic_map = ChebyshevMap(3)
    preimages = chaotic_map.preimages(0.3)
    assert len(preimages) == 3
    assert preimages == sorted(preimages)
    for x in preimages:
        assert chaotic_map.advance(x) == pytest.approx(0.3, abs=1e-12)


def test_branch_preimages_match_scalar_preimages() -> None:
    """Test that the vectorised branches agree with the scalar preimage sets."""
    import numpy as np

    from chaosrng.maps import ChebyshevMap, LogisticMap

    y = np.array([0.1, 0.4, 0.9])
    branches = LogisticMap().branch_preimages(y)
    for column, value in enumerate(y):
        assert sorted(branches[:, column]) == pytest.approx(LogisticMap().preimages(float(value)))

    chebyshev = ChebyshevMap(4)
    branches = chebyshev.branch_preimages(y)
    for column, value in enumerate(y):
        assert sorted(branches[:, column]) == pytest.approx(chebyshev.preimages(float(value)))


def test_list_maps() -> None:
    """Test that the five built-in maps are registered."""
    from chaosrng.maps import list_maps

    assert set(list_maps()) >= {"logistic", "gauss", "tent", "chebyshev", "henon"}


def test_get_map_with_params() -> None:
    """Test building maps by name."""
    from chaosrng.maps import ChebyshevMap, HenonMap, get_map

    chebyshev = get_map("chebyshev", k=3)
    assert isinstance(chebyshev, ChebyshevMap)
    assert chebyshev.k == 3
    assert get_map("henon", a=1.2) == HenonMap(a=1.2)


def test_get_map_errors() -> None:
    """Test that unknown names and parameters raise ConfigurationError."""
    from chaosrng.exceptions import ConfigurationError
    from chaosrng.maps import get_map

    with pytest.raises(ConfigurationError, match="Unknown map"):
        get_map("bernoulli")
    with pytest.raises(ConfigurationError, match="does not accept"):
        get_map("logistic", k=3)


def test_register_custom_map() -> None:
    """Test registering a custom map with the decorator."""
    import numpy as np

    from chaosrng.maps import Map1D, get_map, list_maps, register_map

    @register_map("doubling-test")
    class DoublingMap(Map1D):
        name = "doubling-test"

        @property
        def params(self) -> dict[str, float]:
            return {}

        def advance(self, x: float) -> float:
            return (2.0 * x) % 1.0

        def advance_array(self, x: "np.ndarray") -> "np.ndarray":
            return np.mod(2.0 * x, 1.0)

        def derivative(self, x: float) -> float:
            return 2.0

    assert "doubling-test" in list_maps()
    assert get_map("doubling-test").forward(0.75) == 0.5


def test_map_equality_and_hash() -> None:
    """Test that maps compare by type and parameters."""
    from chaosrng.maps import GaussMap, LogisticMap

    assert LogisticMap(4.0) == LogisticMap(4.0)
    assert LogisticMap(4.0) != LogisticMap(3.9)
    assert LogisticMap() != GaussMap()
    assert len({LogisticMap(), LogisticMap(4.0), GaussMap()}) == 2


def test_forward_checks_domain(logistic_map: "object") -> None:
    """Test that forward validates the state while advance does not."""
    from chaosrng.exceptions import DomainError

    with pytest.raises(DomainError):
        logistic_map.forward(1.2)  # type: ignore[attr-defined]
    assert logistic_map.forward(0.5) == 1.0  # type: ignore[attr-defined]
