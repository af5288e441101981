"""Tests for invariant laws, Frobenius-Perron residuals and histogram push-forward."""

import math

import pytest


def test_logistic_law_closed_forms() -> None:
    """Test the arcsine density, CDF and quantile at known points."""
    from chaosrng.measures.laws import logistic_cdf, logistic_density, logistic_quantile

    assert logistic_density(0.5) == pytest.approx(2.0 / math.pi)
    assert logistic_density(0.0) == 0.0
    assert logistic_density(1.0) == 0.0
    assert logistic_cdf(0.25) == pytest.approx(1.0 / 3.0)
    assert logistic_quantile(1.0 / 3.0) == pytest.approx(0.25)


def test_gauss_law_closed_forms() -> None:
    """Test the Gauss density, CDF and quantile."""
    from chaosrng.exceptions import DomainError
    from chaosrng.measures.laws import gauss_cdf, gauss_density, gauss_quantile

    assert gauss_cdf(1.0) == pytest.approx(1.0)
    assert gauss_density(0.0) == pytest.approx(1.0 / math.log(2.0))
    assert gauss_quantile(gauss_cdf(0.3)) == pytest.approx(0.3)
    with pytest.raises(DomainError):
        gauss_density(1.5)


def test_chebyshev_law_closed_forms() -> None:
    """Test the arcsine law on [-1, 1]."""
    from chaosrng.measures.laws import chebyshev_cdf, chebyshev_quantile

    assert chebyshev_cdf(0.0) == pytest.approx(0.5)
    assert chebyshev_quantile(0.5) == pytest.approx(0.0, abs=1e-15)
    assert chebyshev_quantile(chebyshev_cdf(-0.7)) == pytest.approx(-0.7)


@pytest.mark.parametrize("law_name", ["LOGISTIC_LAW", "GAUSS_LAW", "UNIFORM_LAW", "CHEBYSHEV_LAW"])
def test_laws_have_unit_mass(law_name: str) -> None:
    """Test that each law integrates to 1 and its CDF matches quadrature of the density."""
    from scipy import integrate

    from chaosrng.measures import laws

    law = getattr(laws, law_name)
    assert law.expectation(lambda x: 1.0) == pytest.approx(1.0, abs=1e-9)
    low, high = law.support
    mid = (low + high) / 2.0 + 0.1
    value, _ = integrate.quad(law.density, mid, high - 0.05 * (high - low))
    assert value == pytest.approx(law.mass(mid, high - 0.05 * (high - low)), abs=1e-9)


def test_law_expectation_of_indicator() -> None:
    """Test quadrature of an interval indicator against the closed-form mass."""
    from chaosrng.measures.laws import GAUSS_LAW, LOGISTIC_LAW

    assert GAUSS_LAW.expectation(lambda x: 1.0 if x <= 0.5 else 0.0, breakpoints=(0.5,)) == pytest.approx(
        math.log2(1.5), abs=1e-9
    )
    assert LOGISTIC_LAW.expectation(lambda x: x) == pytest.approx(0.5, abs=1e-9)


def test_get_law() -> None:
    """Test the law lookup and its unsupported cases."""
    from chaosrng.exceptions import UnsupportedMapError
    from chaosrng.maps import ChebyshevMap, GaussMap, HenonMap, LogisticMap, TentMap
    from chaosrng.measures.laws import CHEBYSHEV_LAW, GAUSS_LAW, LOGISTIC_LAW, UNIFORM_LAW, get_law

    assert get_law(LogisticMap()) is LOGISTIC_LAW
    assert get_law(GaussMap()) is GAUSS_LAW
    assert get_law(TentMap()) is UNIFORM_LAW
    assert get_law(ChebyshevMap(5)) is CHEBYSHEV_LAW
    with pytest.raises(UnsupportedMapError):
        get_law(HenonMap())
    with pytest.raises(UnsupportedMapError):
        get_law(LogisticMap(3.9))


def test_fp_residual_logistic(logistic_map: "object") -> None:
    """Test that the arcsine density is a fixed point of the logistic transfer operator."""
    from chaosrng.measures.laws import LOGISTIC_LAW
    from chaosrng.measures.transfer import fp_residual, fp_residual_grid

    assert fp_residual(logistic_map, LOGISTIC_LAW, 0.5) < 1e-12  # type: ignore[arg-type]
    assert fp_residual_grid(logistic_map, LOGISTIC_LAW).max() < 1e-9  # type: ignore[arg-type]


def test_fp_residual_gauss_exact_mode(gauss_map: "object") -> None:
    """Test the Gauss residual with the closed-form tail."""
    from chaosrng.measures.laws import GAUSS_LAW
    from chaosrng.measures.transfer import fp_check, fp_residual_grid

    assert fp_residual_grid(gauss_map, GAUSS_LAW, truncation=0).max() < 1e-9  # type: ignore[arg-type]
    check = fp_check(gauss_map, GAUSS_LAW, 0.5, truncation=0)  # type: ignore[arg-type]
    assert check.tail_bound == 0.0
    assert check.terms == 32


def test_fp_residual_gauss_truncated_reports_tail(gauss_map: "object") -> None:
    """Test that a truncated Gauss sum misses exactly its reported tail."""
    from chaosrng.measures.laws import GAUSS_LAW
    from chaosrng.measures.transfer import fp_check

    check = fp_check(gauss_map, GAUSS_LAW, 0.5, truncation=100)  # type: ignore[arg-type]
    assert check.tail_bound == pytest.approx(1.0 / (math.log(2.0) * 101.5))
    assert check.residual == pytest.approx(check.tail_bound, rel=1e-9)


def test_fp_residual_tent_and_chebyshev() -> None:
    """Test the residuals of the tent and degree-2 Chebyshev maps."""
    from chaosrng.maps import ChebyshevMap, TentMap
    from chaosrng.measures.laws import CHEBYSHEV_LAW, UNIFORM_LAW
    from chaosrng.measures.transfer import fp_residual_grid

    assert fp_residual_grid(TentMap(), UNIFORM_LAW).max() < 1e-12
    assert fp_residual_grid(ChebyshevMap(2), CHEBYSHEV_LAW).max() < 1e-9


def test_fp_residual_errors(logistic_map: "object") -> None:
    """Test singular preimages, planar maps and points outside the support."""
    from chaosrng.exceptions import DomainError, SingularPointError, UnsupportedMapError
    from chaosrng.maps import HenonMap
    from chaosrng.measures.laws import LOGISTIC_LAW
    from chaosrng.measures.transfer import fp_residual

    with pytest.raises(SingularPointError):
        fp_residual(logistic_map, LOGISTIC_LAW, 1.0)  # type: ignore[arg-type]
    with pytest.raises(UnsupportedMapError):
        fp_residual(HenonMap(), LOGISTIC_LAW, 0.5)
    with pytest.raises(DomainError):
        fp_residual(logistic_map, LOGISTIC_LAW, 1.5)  # type: ignore[arg-type]


def test_density_histogram_validation() -> None:
    """Test that histograms must carry unit mass on increasing edges."""
    import numpy as np

    from chaosrng.exceptions import DomainError
    from chaosrng.measures.histogram import DensityHistogram

    with pytest.raises(DomainError):
        DensityHistogram(np.array([0.0, 0.5, 1.0]), np.array([0.5, 0.4]))
    with pytest.raises(DomainError):
        DensityHistogram(np.array([0.0, 1.0, 0.5]), np.array([0.5, 0.5]))
    with pytest.raises(DomainError):
        DensityHistogram(np.array([0.0, 1.0]), np.array([0.5, 0.5]))


def test_initial_histograms() -> None:
    """Test the uniform and concentrated starting measures."""
    from chaosrng.measures.histogram import (
        left_concentrated_histogram,
        right_concentrated_histogram,
        uniform_histogram,
    )

    uniform = uniform_histogram(10)
    left = left_concentrated_histogram(10)
    right = right_concentrated_histogram(10)
    for hist in (uniform, left, right):
        assert hist.total_mass == pytest.approx(1.0, abs=1e-12)
    assert uniform.masses == pytest.approx([0.1] * 10)
    assert left.masses[0] > left.masses[-1]
    assert right.masses[-1] > right.masses[0]
    assert left.masses == pytest.approx(right.masses[::-1])


def test_discretize_law_and_l1_distance() -> None:
    """Test exact law masses and the L1 distance between histograms."""
    import numpy as np

    from chaosrng.exceptions import DomainError
    from chaosrng.measures.histogram import discretize_law, equal_mass_edges, l1_distance, uniform_histogram
    from chaosrng.measures.laws import LOGISTIC_LAW

    edges = equal_mass_edges(LOGISTIC_LAW, 8)
    hist = discretize_law(LOGISTIC_LAW, edges=edges)
    assert hist.masses == pytest.approx(np.full(8, 1 / 8), abs=1e-12)
    assert l1_distance(hist, hist) == 0.0
    assert l1_distance(uniform_histogram(8), discretize_law(LOGISTIC_LAW, 8)) > 0.0
    with pytest.raises(DomainError):
        l1_distance(uniform_histogram(8), uniform_histogram(4))


def test_pushforward_tent_preserves_uniform() -> None:
    """Test that the uniform histogram is invariant under the tent map."""
    from chaosrng.maps import TentMap
    from chaosrng.measures.histogram import pushforward, uniform_histogram

    hist = uniform_histogram(64)
    image = pushforward(hist, TentMap())
    assert image.masses == pytest.approx(hist.masses, abs=1e-14)


def test_pushforward_conserves_mass(logistic_map: "object", gauss_map: "object") -> None:
    """Test that every push-forward step keeps the total mass at 1."""
    from chaosrng.measures.histogram import iterate_pushforward, left_concentrated_histogram

    for chaotic_map in (logistic_map, gauss_map):
        sequence = iterate_pushforward(left_concentrated_histogram(100), chaotic_map, 10)  # type: ignore[arg-type]
        assert len(sequence) == 11
        for hist in sequence:
            assert abs(hist.total_mass - 1.0) < 1e-12


def test_histogram_cumulative_is_monotone_and_exact_at_edges() -> None:
    """Test that the interpolated cumulative mass matches the bin masses at every edge."""
    import numpy as np

    from chaosrng.measures.histogram import discretize_law, equal_mass_edges
    from chaosrng.measures.laws import LOGISTIC_LAW

    hist = discretize_law(LOGISTIC_LAW, edges=equal_mass_edges(LOGISTIC_LAW, 50))
    assert hist.cumulative(hist.edges) == pytest.approx(np.linspace(0.0, 1.0, 51), abs=1e-12)
    grid = np.linspace(0.0, 1.0, 10_001)
    assert np.all(np.diff(hist.cumulative(grid)) >= 0.0)
    assert hist.cumulative([-1.0, 2.0]).tolist() == pytest.approx([0.0, 1.0])


@pytest.mark.parametrize("name", ["logistic", "chebyshev"])
def test_pushforward_keeps_discretised_law_fixed(name: str) -> None:
    """Test that the discretised arcsine law is mapped onto itself."""
    from chaosrng.maps import get_map
    from chaosrng.measures.histogram import discretize_law, equal_mass_edges, l1_distance, pushforward
    from chaosrng.measures.laws import get_law

    chaotic_map = get_map(name)
    law = get_law(chaotic_map)
    target = discretize_law(law, edges=equal_mass_edges(law, 200))
    assert l1_distance(pushforward(target, chaotic_map), target) < 0.01  # type: ignore[arg-type]


@pytest.mark.slow
def test_pushforward_converges_to_arcsine_law(logistic_map: "object") -> None:
    """Test that three different starts converge to the arcsine law."""
    import itertools

    from chaosrng.measures.histogram import (
        discretize_law,
        equal_mass_edges,
        iterate_pushforward,
        l1_distance,
        left_concentrated_histogram,
        right_concentrated_histogram,
        uniform_histogram,
    )
    from chaosrng.measures.laws import LOGISTIC_LAW

    edges = equal_mass_edges(LOGISTIC_LAW, 200)
    target = discretize_law(LOGISTIC_LAW, edges=edges)
    starts = (
        uniform_histogram(edges=edges),
        left_concentrated_histogram(edges=edges),
        right_concentrated_histogram(edges=edges),
    )
    finals = [iterate_pushforward(start, logistic_map, 50)[-1] for start in starts]  # type: ignore[arg-type]
    for final in finals:
        assert l1_distance(final, target) < 0.05
    for first, second in itertools.combinations(finals, 2):
        assert l1_distance(first, second) < 0.05


def test_pushforward_errors(logistic_map: "object") -> None:
    """Test planar maps and edges that do not span the domain."""
    from chaosrng.exceptions import DomainError, UnsupportedMapError
    from chaosrng.maps import HenonMap
    from chaosrng.measures.histogram import pushforward, uniform_histogram

    with pytest.raises(UnsupportedMapError):
        pushforward(uniform_histogram(10), HenonMap())  # type: ignore[arg-type]
    with pytest.raises(DomainError):
        pushforward(uniform_histogram(10, domain=(0.0, 0.5)), logistic_map)  # type: ignore[arg-type]
