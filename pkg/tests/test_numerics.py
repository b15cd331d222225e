import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from cheby.errors import DomainError, NonConvergence
from cheby.models.function import INF
from cheby.models.interval import Interval, Tolerance
from cheby.utils.numerics import (
    beta, beta_power, essential_sup, gamma, integrate, log_beta, log_gamma, lp_norm, segment_edges,
)

BETA_GRID = [0.5, 1.0, 1.5, 2.0, 3.5, 7.0, 11.0]


class TestIntegrate:
    def test_cubic(self):
        result = integrate(lambda x: x ** 3, Interval(0.0, 2.0))
        assert result.value == pytest.approx(4.0, rel=1e-13)

    def test_gauss_exact_degree_needs_no_bisection(self, unit):
        result = integrate(lambda x: x ** 13, unit)
        assert result.subdivisions_used == 1
        assert result.value == pytest.approx(1.0 / 14.0, rel=1e-13)

    def test_kink_at_breakpoint(self, unit):
        result = integrate(lambda x: np.abs(x - 0.3), unit, breakpoints=[0.3])
        assert result.value == pytest.approx(0.29, rel=1e-13)

    def test_endpoint_singularity(self, unit):
        result = integrate(np.sqrt, unit)
        assert result.value == pytest.approx(2.0 / 3.0, abs=1e-9)

    def test_constant_integrand(self, shifted):
        result = integrate(lambda x: 2.5, shifted)
        assert result.value == pytest.approx(10.0, rel=1e-14)

    def test_subdivision_cap_raises(self, unit):
        tight = Tolerance(max_subdivisions=1)
        with pytest.raises(NonConvergence) as info:
            integrate(lambda x: np.sin(200.0 * x), unit, tol=tight)
        assert info.value.subdivisions == 1
        assert info.value.estimate is not None

    def test_breakpoint_outside_interval(self, unit):
        with pytest.raises(DomainError):
            integrate(lambda x: x, unit, breakpoints=[2.0])

    def test_sine_over_half_period(self):
        result = integrate(np.sin, Interval(0.0, math.pi))
        assert result.value == pytest.approx(2.0, abs=1e-10)

    def test_redundant_breakpoints_change_nothing(self, unit):
        h = lambda x: np.exp(x) * np.cos(3.0 * x)
        plain = integrate(h, unit).value
        split = integrate(h, unit, breakpoints=[0.1, 0.25, 0.5, 0.75]).value
        assert split == pytest.approx(plain, rel=1e-10, abs=1e-12)

    @pytest.mark.parametrize('bad', [np.nan, np.inf])
    def test_non_finite_integrand_raises(self, unit, bad):
        with pytest.raises(NonConvergence):
            integrate(lambda x: np.where(x > 0.5, bad, x), unit)


def test_segment_edges_drops_endpoints_and_duplicates(unit):
    assert segment_edges(unit, [0.0, 0.5, 0.5, 1.0]) == [0.0, 0.5, 1.0]


class TestNorms:
    def test_identity_norms(self, unit):
        assert lp_norm(lambda x: x, unit, p=1.0) == pytest.approx(0.5, rel=1e-12)
        assert lp_norm(lambda x: x, unit, p=2.0) == pytest.approx(1.0 / math.sqrt(3.0), rel=1e-12)
        assert lp_norm(lambda x: x, unit, p=3.0) == pytest.approx(0.25 ** (1.0 / 3.0), rel=1e-12)
        assert lp_norm(lambda x: x, unit, p=INF) == pytest.approx(1.0, rel=1e-10)

    def test_sup_of_piecewise_constant(self, unit):
        step = lambda x: np.where((x > 0.4) & (x < 0.6), 5.0, 0.0)
        assert essential_sup(step, unit, breakpoints=[0.4, 0.6]) == pytest.approx(5.0)

    def test_sup_interior_maximum(self, unit):
        assert essential_sup(lambda x: np.sin(math.pi * x), unit) == pytest.approx(1.0, abs=1e-10)

    def test_sup_non_finite(self, unit):
        assert essential_sup(lambda x: np.where(x > 0.5, np.inf, 0.0), unit) == INF

    def test_rejects_exponent_below_one(self, unit):
        with pytest.raises(DomainError):
            lp_norm(lambda x: x, unit, p=0.5)

    def test_large_exponent_does_not_overflow(self, unit):
        expected = 3.0 * (1.0 / 1001.0) ** (1.0 / 1000.0)
        assert lp_norm(lambda x: 3.0 * x, unit, p=1000.0) == pytest.approx(expected, rel=1e-8)

    def test_zero_function(self, unit):
        assert lp_norm(lambda x: 0.0 * x, unit, p=3.0) == 0.0

    def test_monotone_in_p_on_unit_length(self, unit):
        h = lambda x: 1.0 + np.sin(5.0 * x) ** 2
        norms = [lp_norm(h, unit, p=p) for p in (1.0, 1.25, 1.5, 2.0, 3.0, 5.0, 10.0, INF)]
        for smaller, larger in zip(norms, norms[1:]):
            assert smaller <= larger + 1e-9

    @settings(max_examples=25, deadline=None)
    @given(
        alpha=st.floats(min_value=-100.0, max_value=100.0).filter(lambda a: abs(a) > 1e-3),
        p=st.sampled_from([1.0, 1.5, 2.0, 3.0, INF]),
    )
    def test_absolutely_homogeneous(self, alpha, p):
        unit = Interval.unit()
        h = lambda x: 1.0 + x ** 2
        scaled = lp_norm(lambda x: alpha * h(x), unit, p=p)
        assert scaled == pytest.approx(abs(alpha) * lp_norm(h, unit, p=p), rel=1e-8)


class TestGamma:
    @pytest.mark.parametrize('x', [0.1, 0.3, 0.5, 1.0, 1.5, 2.5, 7.3, 20.0, 100.5])
    def test_matches_math_gamma(self, x):
        assert gamma(x) == pytest.approx(math.gamma(x), rel=1e-12)

    def test_half(self):
        assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)

    def test_integers_are_factorials(self):
        for n in range(1, 15):
            assert gamma(n) == pytest.approx(math.factorial(n - 1), rel=1e-13)

    @pytest.mark.parametrize('x', [0.2, 0.9, 3.0, 50.0, 1000.0])
    def test_log_gamma(self, x):
        assert log_gamma(x) == pytest.approx(math.lgamma(x), rel=1e-12, abs=1e-13)

    def test_overflow_is_infinite(self):
        assert gamma(200.0) == INF

    @pytest.mark.parametrize('x', [0.0, -1.0, -0.5, math.nan, 'a'])
    def test_domain(self, x):
        with pytest.raises(DomainError):
            gamma(x)


class TestBeta:
    def test_small_integers(self):
        assert beta(2.0, 3.0) == pytest.approx(1.0 / 12.0, rel=1e-13)

    @pytest.mark.parametrize('x, y', [(0.5, 0.5), (2.0, 1.5), (3.0, 1.25), (11.0, 3.0), (150.0, 150.0)])
    def test_matches_scipy(self, x, y):
        assert beta(x, y) == pytest.approx(special.beta(x, y), rel=1e-10)

    def test_log_route_for_large_arguments(self):
        assert log_beta(150.0, 150.0) == pytest.approx(special.betaln(150.0, 150.0), rel=1e-12)

    def test_power(self):
        assert beta_power(2.0, 2.0, 0.5) == pytest.approx(math.sqrt(1.0 / 6.0), rel=1e-13)

    @given(st.floats(0.05, 50.0), st.floats(0.05, 50.0))
    @settings(max_examples=200, deadline=None)
    def test_symmetric(self, x, y):
        assert beta(x, y) == pytest.approx(beta(y, x), rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta(0.0, 1.0)

    @pytest.mark.parametrize('x', BETA_GRID)
    @pytest.mark.parametrize('y', BETA_GRID)
    def test_gamma_quotient(self, x, y):
        assert beta(x, y) == pytest.approx(gamma(x) * gamma(y) / gamma(x + y), rel=1e-10)
