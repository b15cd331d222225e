import math

import pytest

from cheby.errors import DegenerateInput, DomainError
from cheby.models.bounds import BoundId
from cheby.models.function import INF, ConjugatePair, RampKind
from cheby.models.study import SearchConfig
from cheby.utils.cheb_bounds import omega
from cheby.utils.funcspace import make_constant, make_polynomial, scale_function
from cheby.utils.sharpness import (
    build_member, ceiling, equality_witnesses, example1, example1_closed_form, ratio, search_best_constant,
)


class TestExample1:
    @pytest.mark.parametrize('eps', [0.25, 0.1, 0.01])
    def test_affine_ratio_is_one_twelfth(self, eps):
        report = example1(eps, RampKind.AFFINE_EXTENSION)
        assert report.t_value == pytest.approx(1.0 / (24.0 * eps), rel=1e-10)
        assert report.ratio_inf_1 == pytest.approx(1.0 / 12.0, abs=1e-9)
        assert report.ratio_1_inf == pytest.approx(1.0 / 12.0, abs=1e-9)

    @pytest.mark.parametrize('eps', [0.25, 0.1, 0.05])
    def test_clamped_closed_form(self, eps):
        report = example1(eps, RampKind.CLAMPED_RAMP)
        assert report.t_value == pytest.approx(0.125 - eps ** 2 / 6.0, abs=1e-8)
        assert report.t_parts == pytest.approx(report.t_value, abs=1e-9)
        assert report.closed_form == example1_closed_form(RampKind.CLAMPED_RAMP, eps)

    def test_clamped_ratio_approaches_one_eighth(self):
        report = example1(0.01, RampKind.CLAMPED_RAMP)
        assert report.norms["f'_1"] == pytest.approx(1.0)
        assert report.norms["g'_inf"] == pytest.approx(1.0)
        assert report.ratio_1_inf == pytest.approx(0.125 - 0.01 ** 2 / 6.0, abs=1e-8)
        assert example1(0.05, 'ClampedRamp').ratio_1_inf == pytest.approx(0.125, abs=2e-3)

    def test_clamped_sup_norm_ordering_vanishes(self):
        report = example1(0.05, RampKind.CLAMPED_RAMP)
        assert report.ratio_inf_1 == pytest.approx(2 * 0.05 * report.t_value, rel=1e-10)

    def test_epsilon_domain(self):
        with pytest.raises(DomainError):
            example1(0.5, RampKind.CLAMPED_RAMP)


class TestWitnesses:
    @pytest.fixture(scope='class')
    def witnesses(self):
        return equality_witnesses()

    def test_attained_constants(self, witnesses):
        exact = [w for w in witnesses if w.bound_id in (BoundId.THM4, BoundId.CEBYSEV_112, BoundId.LUPAS_1_PI_SQ)]
        assert len(exact) == 4
        for witness in exact:
            assert witness.ratio == pytest.approx(1.0, abs=1e-8)

    def test_clamped_ramp_ratios(self, witnesses):
        near = [w for w in witnesses if w.bound_id in (BoundId.OSTROWSKI_18, BoundId.REMARK_S)]
        assert len(near) == 2
        for witness in near:
            assert witness.ratio == pytest.approx(1.0 - 4.0 * 0.05 ** 2 / 3.0, abs=1e-8)
            assert witness.ratio >= 0.996

    def test_no_witness_exceeds_its_bound(self, witnesses):
        assert all(w.ratio <= 1.0 + 1e-8 for w in witnesses)


class TestRatio:
    def test_cosine_pair_is_lupas(self, cosine, unit):
        assert ratio(cosine, cosine, unit, ConjugatePair.from_p(2.0)) == pytest.approx(1.0 / math.pi ** 2, rel=1e-10)

    def test_scale_invariant(self, ramp, square, unit):
        pair = ConjugatePair.from_p(3.0)
        base = ratio(ramp, square, unit, pair)
        scaled = ratio(scale_function(ramp, -2.5, 1.0), scale_function(square, 0.3), unit, pair)
        assert scaled == pytest.approx(base, rel=1e-8)

    def test_degenerate(self, identity, unit):
        with pytest.raises(DegenerateInput):
            ratio(identity, make_constant(1.0, unit), unit, ConjugatePair.from_p(2.0))


def test_build_member(unit):
    f = build_member('poly', (1.0, 0.0, 0.0), unit)
    assert float(f(0.3)) == pytest.approx(0.3)
    ramp = build_member('ramp', (0.1, 0.5), unit)
    assert ramp.breakpoints == pytest.approx((0.4, 0.6))


def test_ceiling():
    assert ceiling(ConjugatePair.from_p(2.0)) == pytest.approx(0.125)
    assert ceiling(ConjugatePair.from_p(1.0)) == 0.25
    assert ceiling(ConjugatePair.from_p(INF)) == 0.25


class TestSearch:
    def test_square_pair_finds_the_cosine(self):
        study = search_best_constant(ConjugatePair.from_p(2.0), SearchConfig(seed=7, iterations=200))
        assert 1.0 / math.pi ** 2 - 1e-4 <= study.best_ratio <= omega(2.0) + 1e-6
        assert study.best_ratio == max(c.ratio for c in study.samples)
        assert study.below_ceiling

    def test_sup_norm_pair_uses_the_ramp(self):
        study = search_best_constant(ConjugatePair.from_p(INF), SearchConfig(seed=3, iterations=20))
        assert study.best_ratio >= 0.125 - 1e-3
        assert study.below_ceiling

    @pytest.mark.parametrize('p', [1.5, 3.0])
    def test_never_crosses_the_ceiling(self, p):
        study = search_best_constant(ConjugatePair.from_p(p), SearchConfig(seed=11, iterations=40))
        assert 0.0 <= study.best_ratio <= omega(p) + 1e-6
        assert all(c.ratio >= 0.0 for c in study.samples)

    def test_deterministic_across_worker_counts(self):
        pair = ConjugatePair.from_p(1.5)
        one = search_best_constant(pair, SearchConfig(seed=5, iterations=30, workers=1))
        four = search_best_constant(pair, SearchConfig(seed=5, iterations=30, workers=4))
        assert one.best_ratio == four.best_ratio
        assert one.best_params == four.best_params
        assert [c.ratio for c in one.samples] == [c.ratio for c in four.samples]

    def test_requires_iterations(self):
        with pytest.raises(DomainError):
            search_best_constant(ConjugatePair.from_p(2.0), SearchConfig(iterations=0))

    def test_square_pair_without_anchors(self):
        config = SearchConfig(seed=7, iterations=200, anchors=False)
        study = search_best_constant(ConjugatePair.from_p(2.0), config)
        assert all(c.restart >= 0 for c in study.samples)
        assert study.best_ratio >= 1.0 / math.pi ** 2 - 1e-4
        assert study.best_ratio <= omega(2.0) + 1e-6

    def test_sup_norm_pair_without_anchors(self):
        config = SearchConfig(seed=3, iterations=20, anchors=False)
        study = search_best_constant(ConjugatePair.from_p(INF), config)
        assert study.best_ratio >= 0.125 - 1e-3
        assert study.below_ceiling

    def test_every_family_combination_is_refined(self):
        config = SearchConfig(seed=2, iterations=18, refine_top=0, refine_per_family=1, anchors=False)
        study = search_best_constant(ConjugatePair.from_p(2.0), config)
        refined = {c.families for c in study.samples[config.iterations:]}
        assert len(refined) >= 6


def test_polynomial_member_ratio_is_below_one_eighth(unit):
    f = make_polynomial([0.0, 1.0, -0.5], unit)
    assert ratio(f, f, unit, ConjugatePair.from_p(2.0)) <= 0.125
