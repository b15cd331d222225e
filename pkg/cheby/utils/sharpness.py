"""Sharpness studies: the ramp counterexample, equality witnesses and the
random-restart search for the best constant C(p, q).

The search only produces lower bounds on C(p, q). The BMV constant omega(p)
is a proved ceiling and is reported alongside.
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.optimize import minimize

from cheby.errors import ChebyError, DegenerateInput, DomainError
from cheby.models.bounds import BoundId
from cheby.models.function import INF, ConjugatePair, RampKind, RampVariant
from cheby.models.interval import Interval, Tolerance
from cheby.models.study import Candidate, Example1Report, RatioStudy, SearchConfig, Witness
from cheby.utils.cheb_bounds import evaluate, omega
from cheby.utils.funcspace import (
    derivative_norm, make_cosine, make_example1_pair, make_identity, make_polynomial, make_ramp, make_trig,
)
from cheby.utils.functional import cheb_T, cheb_T_parts

logger = logging.getLogger(__name__)

ZERO_NORM = 1e-14

# Box constraints of each search family
FAMILY_BOUNDS = {
    'trig': ((0.25, 3.0), (-math.pi, math.pi)),          # frequency, phase
    'ramp': ((0.01, 0.49), (0.0, 1.0)),                  # epsilon, relative center
    'poly': ((-2.0, 2.0), (-2.0, 2.0), (-2.0, 2.0)),     # c1, c2, c3
}

ANCHOR_EPSILON = 0.01
# Nelder-Mead runs per refined candidate
REFINE_ROUNDS = 3


def ratio(f, g, iv, pair, tol=None):
    """|T(f,g)| / (||f'||_p ||g'||_q).

    Raises:
        DegenerateInput: if either derivative norm vanishes
    """
    norm_f = derivative_norm(f, pair.p, iv, tol)
    norm_g = derivative_norm(g, pair.q, iv, tol)
    if norm_f <= ZERO_NORM or norm_g <= ZERO_NORM:
        raise DegenerateInput(f"ratio undefined: ||f'||={norm_f:.3g}, ||g'||={norm_g:.3g}")
    return abs(cheb_T(f, g, iv, tol).value) / (norm_f * norm_g)


def example1_closed_form(kind, epsilon):
    """T of the ramp pair, exact."""
    if RampKind(kind) == RampKind.AFFINE_EXTENSION:
        return 1.0 / (24.0 * epsilon)
    return 0.125 - epsilon ** 2 / 6.0


def example1(epsilon, kind, tol=None):
    """Build the ramp pair and report T with both role-orderings of the ratio."""
    variant = RampVariant(kind, epsilon)
    f, g = make_example1_pair(variant)
    iv = Interval.unit()
    t_value = cheb_T(f, g, iv, tol).value
    t_parts = cheb_T_parts(f, g, iv, tol).value
    norms = {
        "f'_1": derivative_norm(f, 1.0, iv, tol),
        "f'_inf": derivative_norm(f, INF, iv, tol),
        "g'_1": derivative_norm(g, 1.0, iv, tol),
        "g'_inf": derivative_norm(g, INF, iv, tol),
    }
    return Example1Report(
        epsilon=epsilon,
        variant=variant.kind,
        t_value=t_value,
        t_parts=t_parts,
        closed_form=example1_closed_form(variant.kind, epsilon),
        norms=norms,
        ratio_inf_1=abs(t_value) / (norms["f'_inf"] * norms["g'_1"]),
        ratio_1_inf=abs(t_value) / (norms["f'_1"] * norms["g'_inf"]),
    )


def _witness(bound_id, f, g, pair=None, note='', tol=None):
    iv = Interval.unit()
    t_value = cheb_T(f, g, iv, tol).value
    bound = evaluate(bound_id, f, g, iv, pair, tol=tol)
    return Witness(
        bound_id=bound_id,
        f=f,
        g=g,
        exponents=pair,
        t_value=t_value,
        bound_value=bound.value,
        ratio=abs(t_value) / bound.value,
        note=note,
    )


def equality_witnesses(tol=None):
    """Known extremal pairs with their numerically computed ratio |T| / bound."""
    iv = Interval.unit()
    x = make_identity(iv)
    cosine = make_trig(1, 0.0, iv)
    affine, _ = make_example1_pair(RampVariant(RampKind.AFFINE_EXTENSION, 0.1))
    clamped, _ = make_example1_pair(RampVariant(RampKind.CLAMPED_RAMP, 0.05))
    return [
        _witness(BoundId.THM4, x, x, note='identity pair, equality', tol=tol),
        _witness(BoundId.CEBYSEV_112, x, x, note='identity pair, equality', tol=tol),
        _witness(BoundId.LUPAS_1_PI_SQ, cosine, cosine, note='first cosine mode, equality', tol=tol),
        _witness(BoundId.THM4, affine, x, note='affine ramp eps=0.1, equality', tol=tol),
        _witness(BoundId.OSTROWSKI_18, clamped, x, note='clamped ramp eps=0.05, ratio 1-4eps^2/3', tol=tol),
        _witness(BoundId.REMARK_S, clamped, x, ConjugatePair(INF, 1.0),
                 note='clamped ramp eps=0.05 at p=inf, ratio 1-4eps^2/3', tol=tol),
    ]


def build_member(family, params, iv):
    """Instantiate a search family from its parameter vector."""
    if family == 'trig':
        frequency, phase = params
        return make_cosine(frequency, phase, iv)
    if family == 'ramp':
        epsilon, position = params
        return make_ramp(epsilon, epsilon + position * (1.0 - 2.0 * epsilon), iv)
    c1, c2, c3 = params
    return make_polynomial([0.0, c1, c2, c3], iv)


def _split(f_family, params):
    size = len(FAMILY_BOUNDS[f_family])
    return tuple(params[:size]), tuple(params[size:])


def score(f_family, g_family, params, iv, pair, tol=None):
    """Ratio of a candidate, 0 when the candidate is degenerate or fails."""
    f_params, g_params = _split(f_family, params)
    try:
        f = build_member(f_family, f_params, iv)
        g = build_member(g_family, g_params, iv)
        return ratio(f, g, iv, pair, tol)
    except ChebyError as e:
        logger.debug(f"Candidate {f_family}/{g_family} {params} scored 0: {e}")
        return 0.0


def ceiling(pair):
    """omega(p) as a proved ceiling, 1/4 for the degenerate pairs."""
    if pair.is_degenerate:
        return 0.25
    return omega(pair.p)


def _combinations(families):
    return [(f_family, g_family) for f_family in families for g_family in families]


def _anchors(families):
    """Deterministic starting points known to be near-extremal."""
    anchors = []
    if 'trig' in families:
        anchors.append(('trig', 'trig', (1.0, 0.0, 1.0, 0.0)))
    if 'poly' in families and 'ramp' in families:
        anchors.append(('poly', 'ramp', (1.0, 0.0, 0.0, ANCHOR_EPSILON, 0.5)))
        anchors.append(('ramp', 'poly', (ANCHOR_EPSILON, 0.5, 1.0, 0.0, 0.0)))
    return anchors


def _random_candidate(index, combos, config, iv, pair, tol):
    rng = np.random.default_rng([config.seed, index])
    f_family, g_family = combos[index % len(combos)]
    bounds = FAMILY_BOUNDS[f_family] + FAMILY_BOUNDS[g_family]
    params = tuple(float(rng.uniform(lo, hi)) for lo, hi in bounds)
    return Candidate(f_family, g_family, params, score(f_family, g_family, params, iv, pair, tol), index)


def _refine(candidate, config, iv, pair, tol):
    """Nelder-Mead from the candidate, restarted on its own result while it still improves."""
    bounds = FAMILY_BOUNDS[candidate.f_family] + FAMILY_BOUNDS[candidate.g_family]
    best = candidate
    for _ in range(REFINE_ROUNDS):
        result = minimize(
            lambda x: -score(candidate.f_family, candidate.g_family, tuple(float(v) for v in x), iv, pair, tol),
            np.array(best.params),
            method='Nelder-Mead',
            bounds=bounds,
            options={'xatol': 1e-6, 'fatol': 1e-12, 'maxfev': config.max_evaluations},
        )
        refined_ratio = -float(result.fun)
        if not refined_ratio > best.ratio + 1e-12:
            break
        params = tuple(float(v) for v in result.x)
        best = Candidate(candidate.f_family, candidate.g_family, params, refined_ratio, candidate.restart)
    return best


def _refinement_starts(samples, config):
    """Best candidates overall plus the best of every family combination."""
    ranked = sorted(samples, key=lambda c: (-c.ratio, c.restart))
    starts = ranked[:config.refine_top]
    per_family = {}
    for candidate in ranked:
        chosen = per_family.setdefault(candidate.families, [])
        if len(chosen) < config.refine_per_family:
            chosen.append(candidate)
    for chosen in per_family.values():
        starts.extend(c for c in chosen if c not in starts)
    return [c for c in starts if c.ratio > 0.0]


def search_best_constant(pair, config=None, iv=None, tol=None):
    """Lower-bound evidence for C(p, q) by random restarts and Nelder-Mead.

    Each restart owns a generator seeded from (config.seed, restart index), so
    the study does not depend on thread scheduling.

    Returns:
        RatioStudy, best_ratio is a lower bound on the best constant
    """
    config = config or SearchConfig()
    if config.iterations < 1:
        raise DomainError(f"iterations must be >= 1, got {config.iterations}")
    iv = iv or Interval.unit()
    tol = tol or Tolerance.default()
    combos = _combinations(config.families)

    anchors = _anchors(config.families) if config.anchors else []
    samples = [
        Candidate(f_family, g_family, params, score(f_family, g_family, params, iv, pair, tol), -1 - i)
        for i, (f_family, g_family, params) in enumerate(anchors)
    ]
    with ThreadPoolExecutor(max_workers=max(1, config.workers)) as executor:
        samples.extend(executor.map(
            lambda index: _random_candidate(index, combos, config, iv, pair, tol),
            range(config.iterations),
        ))
        starts = _refinement_starts(samples, config)
        refined = list(executor.map(lambda candidate: _refine(candidate, config, iv, pair, tol), starts))
    logger.debug(f"Refined {len(starts)} candidates for {pair.label()}")
    samples.extend(r for r, start in zip(refined, starts) if r.ratio > start.ratio)

    best = max(samples, key=lambda c: (c.ratio, -c.restart))
    limit = ceiling(pair)
    if best.ratio > limit + 1e-6:
        logger.warning(f"Search for {pair.label()} crossed the proved ceiling: {best.ratio:.10g} > {limit:.10g}")
    logger.info(f"Best ratio for {pair.label()}: {best.ratio:.10g} ({best.families})")
    return RatioStudy(
        bound_id=BoundId.BMV,
        exponents=pair,
        samples=tuple(samples),
        best_ratio=best.ratio,
        best_params=best.params,
        best_families=best.families,
        ceiling=limit,
    )
