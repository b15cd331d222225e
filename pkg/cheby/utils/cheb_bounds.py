"""Catalogue of upper bounds on |T(f,g)| and the verification sweep.

Each bound has the shape  C * (b-a)**k * N1 * N2  where N1, N2 are derivative
norms (or the oscillation M - m of f). C is the constant on [0, 1]. Under
x = a + (b-a)u, T is unchanged and ||h'||_r scales by (b-a)**(1/r - 1), so the
only power of (b-a) compatible with a change of interval is
k = 2 - 1/r1 - 1/r2. Values use that power; the power appearing in the
published statement is kept as `printed_constant` for comparison.

The Pečarić-Perić bounds are stated on [0, 1] only; on other intervals the
pair is carried to [0, 1] with affine_rescale and the result is marked
`rescaled`.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from cheby.errors import DomainError, NonConvergence, RouteDisagreement
from cheby.models.bounds import BoundEvaluation, BoundId, NormFactor, VerificationRecord
from cheby.models.function import INF, ConjugatePair, reciprocal
from cheby.models.interval import Interval, Tolerance
from cheby.utils.funcspace import affine_rescale, derivative_norm
from cheby.utils.functional import cheb_T, cheb_T_parts
from cheby.utils.numerics import beta, beta_power

logger = logging.getLogger(__name__)

ROUTE_AGREEMENT_TOL = 1e-8
DEFAULT_PAIR1 = 2.0

F, G, F_RANGE = "f'", "g'", 'f range'


def omega(p):
    """The constant of the Beesack-Mitrinović-Vasić bound, in [1/8, 1/4].

    omega(p) = 1/4 ((2^p-1)/(p(p+1)))^(1/p) ((2^q-1)/(q(q+1)))^(1/q), q = p/(p-1),
    formed in log space; omega(inf) is the limit 1/4.
    """
    if not p > 1:
        raise DomainError(f"omega requires p > 1, got {p}")
    if p == INF:
        return 0.25
    q = p / (p - 1.0)

    def log_term(r):
        # log((2^r - 1)/(r(r+1))) / r
        log_numerator = r * math.log(2.0) + math.log1p(-2.0 ** -r)
        return (log_numerator - math.log(r) - math.log(r + 1.0)) / r

    return 0.25 * math.exp(log_term(p) + log_term(q))


def _q_factor(q):
    """1/(q+1)^(1/q)."""
    return (q + 1.0) ** (-1.0 / q)


def remark_s_constant(p, q, length=1.0, printed=False):
    """Constant of the improved L_q x L_p bound for ||f'||_q ||g'||_p.

    1/(q+1)^(1/q) * B(p+1, p/q+1)^(1/p) times (b-a), or (b-a)^(1+1/p) when
    printed is set. p and q need not be conjugate so that limits can be
    checked; p = inf uses the limit 1/(q+1)^(1/q) * max t(1-t)^(1/q).
    """
    if not (p > 1 and q >= 1):
        raise DomainError(f"remark_s_constant requires p > 1, q >= 1, got ({p}, {q})")
    if p == INF:
        # max of t(1-t)^(1/q) is attained at t = q/(q+1)
        t = q / (q + 1.0)
        unit = _q_factor(q) * t * (1.0 - t) ** (1.0 / q)
    else:
        unit = _q_factor(q) * beta_power(p + 1.0, p / q + 1.0, 1.0 / p)
    power = 1.0 + reciprocal(p) if printed else 1.0
    return unit * length ** power


def _beta_root(x, y, exponent):
    """B(x, y)^(1/exponent), with exponent = inf giving 1."""
    return 1.0 if exponent == INF else beta_power(x, y, 1.0 / exponent)


@dataclass(frozen=True)
class BoundRule:
    """How one catalogue entry is built from (p, q) and the secondary pair."""
    id: BoundId
    unit_constant: Callable
    factors: Callable
    consistent_power: Callable
    printed_power: Callable
    uses_pair: bool = False
    uses_pair1: bool = False
    hypothesis: Optional[Callable] = None
    unit_interval_only: bool = False


def _open_p(pair, pair1, f):
    if not 1 < pair.p < INF:
        return f"requires 1 < p < inf, got p={pair.p:g}"
    return None


def _half_open_p(pair, pair1, f):
    if not pair.p > 1:
        return f"requires p > 1, got p={pair.p:g}"
    return None


def _pp_gamma(pair, pair1, f):
    reason = _open_p(pair, pair1, f)
    if reason is None and not 1 < pair1.p < INF:
        reason = f"requires 1 < p1 < inf, got p1={pair1.p:g}"
    return reason


def _thm7(pair, pair1, f):
    if not pair1.p > 1:
        return f"requires alpha > 1, got alpha={pair1.p:g}"
    return None


def _thm7_lp(pair, pair1, f):
    return _half_open_p(pair, pair1, f) or _thm7(pair, pair1, f)


def _ostrowski(pair, pair1, f):
    if f.range_bounds is None:
        return 'requires range metadata m <= f <= M'
    return None


def _const(value):
    return lambda pair, pair1: value


CATALOGUE: Tuple[BoundRule, ...] = (
    BoundRule(
        BoundId.CEBYSEV_112, _const(1.0 / 12.0),
        lambda pair, pair1: ((F, INF), (G, INF)),
        _const(2.0), _const(2.0),
    ),
    BoundRule(
        BoundId.LUPAS_1_PI_SQ, _const(1.0 / math.pi ** 2),
        lambda pair, pair1: ((F, 2.0), (G, 2.0)),
        _const(1.0), _const(1.0),
    ),
    BoundRule(
        BoundId.OSTROWSKI_18, _const(0.125),
        lambda pair, pair1: ((F_RANGE, None), (G, INF)),
        _const(1.0), _const(1.0),
        hypothesis=_ostrowski,
    ),
    BoundRule(
        BoundId.PP_BASIC, _const(0.125),
        lambda pair, pair1: ((G, pair.p), (F, pair.q)),
        _const(0.0), _const(0.0),
        uses_pair=True, hypothesis=_open_p, unit_interval_only=True,
    ),
    BoundRule(
        BoundId.PP_GAMMA,
        lambda pair, pair1: _q_factor(pair.q) * beta_power(pair1.p + 1.0, pair1.p + 1.0, 1.0 / pair1.p),
        lambda pair, pair1: ((G, pair.p), (F, pair1.q)),
        _const(0.0), _const(0.0),
        uses_pair=True, uses_pair1=True, hypothesis=_pp_gamma, unit_interval_only=True,
    ),
    BoundRule(
        BoundId.PP_GAMMA_Q1_EQ_P,
        lambda pair, pair1: _q_factor(pair.q) * beta_power(pair.q + 1.0, pair.q + 1.0, 1.0 / pair.q),
        lambda pair, pair1: ((G, pair.p), (F, pair.p)),
        _const(0.0), _const(0.0),
        uses_pair=True, hypothesis=_open_p, unit_interval_only=True,
    ),
    BoundRule(
        BoundId.PP_GAMMA_Q1_EQ_Q,
        lambda pair, pair1: _q_factor(pair.q) * beta_power(pair.p + 1.0, pair.p + 1.0, 1.0 / pair.p),
        lambda pair, pair1: ((G, pair.p), (F, pair.q)),
        _const(0.0), _const(0.0),
        uses_pair=True, hypothesis=_open_p, unit_interval_only=True,
    ),
    BoundRule(
        BoundId.BMV, lambda pair, pair1: omega(pair.p),
        lambda pair, pair1: ((F, pair.p), (G, pair.q)),
        _const(1.0), _const(1.0),
        uses_pair=True, hypothesis=_open_p,
    ),
    BoundRule(
        BoundId.THM4, _const(1.0 / 12.0),
        lambda pair, pair1: ((G, INF), (F, INF)),
        _const(2.0), _const(2.0),
    ),
    BoundRule(
        BoundId.THM5, lambda pair, pair1: _q_factor(pair.q) * beta(2.0, 1.0 + 1.0 / pair.q),
        lambda pair, pair1: ((G, pair.p), (F, INF)),
        lambda pair, pair1: 1.0 + 1.0 / pair.q, _const(2.0),
        uses_pair=True, hypothesis=_half_open_p,
    ),
    BoundRule(
        BoundId.THM6_LP, lambda pair, pair1: 0.25 * _q_factor(pair.q),
        lambda pair, pair1: ((G, pair.p), (F, 1.0)),
        lambda pair, pair1: 1.0 / pair.q, _const(1.0),
        uses_pair=True, hypothesis=_half_open_p,
    ),
    BoundRule(
        BoundId.THM6_L1, _const(0.25),
        lambda pair, pair1: ((G, 1.0), (F, 1.0)),
        _const(0.0), _const(0.0),
    ),
    BoundRule(
        BoundId.THM7_LINF,
        lambda pair, pair1: 0.5 * _beta_root(pair1.q + 1.0, pair1.q + 1.0, pair1.q),
        lambda pair, pair1: ((F, pair1.p), (G, INF)),
        lambda pair, pair1: 1.0 + 1.0 / pair1.q, lambda pair, pair1: 1.0 / pair1.q,
        uses_pair1=True, hypothesis=_thm7,
    ),
    BoundRule(
        BoundId.THM7_LP,
        lambda pair, pair1: _q_factor(pair.q) * _beta_root(pair1.q + 1.0, pair1.q / pair.q + 1.0, pair1.q),
        lambda pair, pair1: ((F, pair1.p), (G, pair.p)),
        lambda pair, pair1: 1.0 / pair1.q + 1.0 / pair.q, lambda pair, pair1: 1.0 + 1.0 / pair1.q,
        uses_pair=True, uses_pair1=True, hypothesis=_thm7_lp,
    ),
    BoundRule(
        BoundId.THM7_L1,
        lambda pair, pair1: _beta_root(pair1.q + 1.0, pair1.q + 1.0, pair1.q),
        lambda pair, pair1: ((F, pair1.p), (G, 1.0)),
        lambda pair, pair1: 1.0 / pair1.q, lambda pair, pair1: 1.0 / pair1.q,
        uses_pair1=True, hypothesis=_thm7,
    ),
    BoundRule(
        BoundId.REMARK_S, lambda pair, pair1: remark_s_constant(pair.p, pair.q),
        lambda pair, pair1: ((F, pair.q), (G, pair.p)),
        _const(1.0), lambda pair, pair1: 1.0 + reciprocal(pair.p),
        uses_pair=True, hypothesis=_half_open_p,
    ),
)

RULES = {rule.id: rule for rule in CATALOGUE}


def as_pair(value):
    """Accept a ConjugatePair or a bare exponent p."""
    if value is None or isinstance(value, ConjugatePair):
        return value
    try:
        return ConjugatePair.from_p(float(value))
    except (TypeError, ValueError) as e:
        raise DomainError(f"Malformed exponent {value!r}: {e}")


class NormCache:
    """Derivative norms of one (f, g) pair on one interval, computed once."""

    def __init__(self, f, g, iv, tol=None):
        self.functions = {F: f, G: g}
        self.iv = iv
        self.tol = tol
        self._values = {}

    def get(self, role, exponent):
        key = (role, exponent)
        if key not in self._values:
            if role == F_RANGE:
                m, big_m = self.functions[F].range_bounds
                self._values[key] = big_m - m
            else:
                self._values[key] = derivative_norm(self.functions[role], exponent, self.iv, self.tol)
        return self._values[key]


def _unit_cache(f, g, iv, tol):
    unit = Interval.unit()
    if iv == unit:
        return NormCache(f, g, unit, tol), False
    return NormCache(affine_rescale(f, iv, unit), affine_rescale(g, iv, unit), unit, tol), True


def _inapplicable(rule, pair, pair1, reason):
    return BoundEvaluation(
        id=rule.id,
        exponents=pair if rule.uses_pair else None,
        pair1=pair1 if rule.uses_pair1 else None,
        constant=math.nan,
        printed_constant=math.nan,
        norm_factors=(),
        value=INF,
        applicable=False,
        reason=reason,
    )


def _evaluate_rule(rule, f, g, iv, pair, pair1, cache, unit_cache):
    reason = rule.hypothesis(pair, pair1, f) if rule.hypothesis else None
    if reason:
        return _inapplicable(rule, pair, pair1, reason)

    rescaled = False
    norms = cache
    if rule.unit_interval_only:
        norms, rescaled = unit_cache()

    factors = tuple(
        NormFactor(role, exponent, norms.get(role, exponent))
        for role, exponent in rule.factors(pair, pair1)
    )
    for factor in factors:
        if not math.isfinite(factor.value):
            return _inapplicable(rule, pair, pair1, f"{factor.label()} is not finite")

    unit_constant = rule.unit_constant(pair, pair1)
    length = norms.iv.length
    constant = unit_constant * length ** rule.consistent_power(pair, pair1)
    printed_constant = unit_constant * length ** rule.printed_power(pair, pair1)
    value = constant
    for factor in factors:
        value *= factor.value
    return BoundEvaluation(
        id=rule.id,
        exponents=pair if rule.uses_pair else None,
        pair1=pair1 if rule.uses_pair1 else None,
        constant=constant,
        printed_constant=printed_constant,
        norm_factors=factors,
        value=value,
        applicable=True,
        rescaled=rescaled,
    )


def _lazy_unit_cache(f, g, iv, tol):
    holder = {}

    def get():
        if 'cache' not in holder:
            holder['cache'] = _unit_cache(f, g, iv, tol)
        return holder['cache']
    return get


def evaluate(bound_id, f, g, iv, pair=None, pair1=None, tol=None):
    """Evaluate one catalogue bound for (f, g) on iv.

    Args:
        bound_id: BoundId (or its string value)
        pair: Conjugate pair (p, q) for exponent-dependent bounds
        pair1: Secondary pair, (p1, q1) for PPgamma and (alpha, beta) for
            Thm7; defaults to (2, 2)

    Returns:
        BoundEvaluation, inapplicable rather than failing when a hypothesis is absent

    Raises:
        DomainError: malformed or missing exponent pair
    """
    rule = RULES[BoundId(bound_id)]
    pair = as_pair(pair)
    pair1 = as_pair(pair1) or ConjugatePair.from_p(DEFAULT_PAIR1)
    if rule.uses_pair and pair is None:
        raise DomainError(f"{rule.id.value} needs an exponent pair")
    return _evaluate_rule(rule, f, g, iv, pair, pair1, NormCache(f, g, iv, tol), _lazy_unit_cache(f, g, iv, tol))


def evaluate_all(f, g, iv, exponent_grid, pair1=None, tol=None):
    """Every catalogue bound at every grid exponent, sorted by (id, p).

    Bounds that do not depend on (p, q) are evaluated once.
    """
    grid = []
    seen = set()
    for item in exponent_grid:
        pair = as_pair(item)
        if pair.p not in seen:
            seen.add(pair.p)
            grid.append(pair)
    if not grid:
        raise DomainError("exponent grid is empty")
    pair1 = as_pair(pair1) or ConjugatePair.from_p(DEFAULT_PAIR1)

    cache = NormCache(f, g, iv, tol)
    unit_cache = _lazy_unit_cache(f, g, iv, tol)
    evaluations = []
    for rule in CATALOGUE:
        for pair in (grid if rule.uses_pair else [grid[0]]):
            evaluations.append(_evaluate_rule(rule, f, g, iv, pair, pair1, cache, unit_cache))
    return sorted(evaluations, key=lambda ev: ev.sort_key)


def verify(f, g, iv, exponent_grid, tol=None, pair1=None):
    """Compute T by both routes and check every applicable bound.

    Raises:
        RouteDisagreement: if the two values of T differ beyond 1e-8 relative
        NonConvergence: propagated from quadrature, or T is not finite
    """
    tol = tol or Tolerance.default()
    direct = cheb_T(f, g, iv, tol).value
    parts = cheb_T_parts(f, g, iv, tol).value
    if not (math.isfinite(direct) and math.isfinite(parts)):
        raise NonConvergence(f"T({f.label}, {g.label}) on {iv} is not finite: {direct!r} / {parts!r}")
    if abs(direct - parts) > ROUTE_AGREEMENT_TOL * max(1.0, abs(direct)):
        raise RouteDisagreement(
            f"T({f.label}, {g.label}) on {iv}: identity {direct!r} vs parts {parts!r}"
        )
    record = VerificationRecord(
        f_label=f.label,
        g_label=g.label,
        interval=iv,
        t_value=direct,
        t_parts=parts,
        evaluations=tuple(evaluate_all(f, g, iv, exponent_grid, pair1, tol)),
    )
    for ev in record.violations:
        logger.warning(f"{ev.id.value} violated for ({f.label}, {g.label}): bound {ev.value:.6g} < |T| {record.t_abs:.6g}")
    return record
