import math

import pytest
from hypothesis import given, settings, strategies as st

from cheby.errors import DomainError
from cheby.models.function import TRoute
from cheby.models.interval import Interval
from cheby.utils.funcspace import (
    affine_rescale, corpus, make_constant, make_identity, make_kink, make_polynomial, make_ramp, make_trig,
    scale_function,
)
from cheby.utils.functional import cheb_T, cheb_T_parts, mean_difference, parts_kernel

coefficients = st.lists(st.integers(-20, 20).map(lambda k: k / 10.0), min_size=2, max_size=4)


class TestChebT:
    def test_identity_pair(self, identity):
        result = cheb_T(identity, identity, identity.interval)
        assert result.route is TRoute.IDENTITY
        assert result.value == pytest.approx(1.0 / 12.0, rel=1e-12)

    def test_identity_pair_scales_with_length(self, shifted):
        x = make_identity(shifted)
        assert cheb_T(x, x, shifted).value == pytest.approx(16.0 / 12.0, rel=1e-12)

    def test_first_cosine_mode(self, cosine):
        # mean of cos^2 is 1/2, mean of cos is 0
        assert cheb_T(cosine, cosine, cosine.interval).value == pytest.approx(0.5, rel=1e-12)

    def test_constant_gives_zero(self, identity, unit):
        assert cheb_T(identity, make_constant(2.0, unit), unit).value == pytest.approx(0.0, abs=1e-14)

    def test_opposite_monotonicity_is_negative(self, identity, unit):
        decreasing = make_polynomial([1.0, -1.0], unit)
        assert cheb_T(identity, decreasing, unit).value == pytest.approx(-1.0 / 12.0, rel=1e-12)

    @given(coefficients, coefficients)
    @settings(max_examples=50, deadline=None)
    def test_symmetric(self, c_f, c_g):
        unit = Interval.unit()
        f, g = make_polynomial(c_f, unit), make_polynomial(c_g, unit)
        assert cheb_T(f, g, unit).value == pytest.approx(cheb_T(g, f, unit).value, abs=1e-12)

    @given(coefficients, coefficients, st.floats(-3.0, 3.0), st.floats(-3.0, 3.0), st.floats(-5.0, 5.0))
    @settings(max_examples=50, deadline=None)
    def test_homogeneous_and_shift_invariant(self, c_f, c_g, alpha, beta, shift):
        unit = Interval.unit()
        f, g = make_polynomial(c_f, unit), make_polynomial(c_g, unit)
        scaled = cheb_T(scale_function(f, alpha, shift), scale_function(g, beta, -shift), unit).value
        assert scaled == pytest.approx(alpha * beta * cheb_T(f, g, unit).value, abs=1e-10)

    def test_invariant_under_affine_change_of_variable(self, unit, shifted):
        f, g = make_ramp(0.1, 0.3, unit), make_trig(2, 0.4, unit)
        moved = cheb_T(affine_rescale(f, unit, shifted), affine_rescale(g, unit, shifted), shifted).value
        assert moved == pytest.approx(cheb_T(f, g, unit).value, abs=1e-10)


class TestPartsRoute:
    def test_identity_pair(self, identity, unit):
        result = cheb_T_parts(identity, identity, unit)
        assert result.route is TRoute.PARTS_KERNEL
        assert result.value == pytest.approx(1.0 / 12.0, rel=1e-10)

    def test_kinked_pair(self, unit):
        f, g = make_ramp(0.05, 0.5, unit), make_kink(0.3, unit)
        assert cheb_T_parts(f, g, unit).value == pytest.approx(cheb_T(f, g, unit).value, abs=1e-9)

    @pytest.mark.parametrize('iv', [Interval(0.0, 1.0), Interval(-1.0, 3.0)])
    def test_agrees_with_identity_route_on_corpus(self, iv):
        members = corpus(3, 8, iv)
        for f, g in zip(members, members[1:] + members[:1]):
            direct = cheb_T(f, g, iv).value
            assert cheb_T_parts(f, g, iv).value == pytest.approx(direct, abs=1e-8 * max(1.0, abs(direct)))


class TestMeanDifference:
    def test_identity(self, identity, unit):
        # mean over [0, 1] is 1/2, over [0, 1/4] is 1/8
        assert mean_difference(identity, unit, Interval(0.0, 0.25)) == pytest.approx(0.375)

    def test_same_interval(self, ramp, unit):
        assert mean_difference(ramp, unit, unit) == pytest.approx(0.0, abs=1e-15)

    def test_inner_must_be_contained(self, identity, unit):
        with pytest.raises(DomainError):
            mean_difference(identity, unit, Interval(0.5, 1.5))

    def test_parts_kernel(self, identity, unit):
        # (t - a) (t/2 - 1/2) for g = x on [0, 1]
        assert parts_kernel(identity, unit, 0.25) == pytest.approx(0.25 * (0.125 - 0.5))
        assert parts_kernel(identity, unit, 0.0) == 0.0
        assert parts_kernel(identity, unit, 1.0) == pytest.approx(0.0, abs=1e-15)

    def test_parts_kernel_recovers_t(self, unit):
        # T(f, g) = -(1/(b-a)) int f'(t) K(t) dt; for f = x on [0, 1] this is -int K
        g = make_trig(1, 0.3, unit)
        nodes = [i / 400.0 for i in range(401)]
        values = [parts_kernel(g, unit, t) for t in nodes]
        trapezoid = sum(0.5 * (u + v) / 400.0 for u, v in zip(values, values[1:]))
        assert -trapezoid == pytest.approx(cheb_T(make_identity(unit), g, unit).value, abs=1e-5)

    def test_parts_kernel_outside(self, identity, unit):
        with pytest.raises(DomainError):
            parts_kernel(identity, unit, 1.5)


def test_ramp_pair_closed_form(unit):
    eps = 0.05
    f, g = make_ramp(eps, 0.5, unit), make_identity(unit)
    assert cheb_T(f, g, unit).value == pytest.approx(0.125 - eps ** 2 / 6.0, rel=1e-12)
    assert math.isclose(cheb_T_parts(f, g, unit).value, 0.125 - eps ** 2 / 6.0, rel_tol=1e-10)
