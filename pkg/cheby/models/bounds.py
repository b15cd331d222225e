"""Bound identifiers, evaluations and verification records."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from cheby.models.function import ConjugatePair, format_exponent
from cheby.models.interval import Interval

# Relative slack allowed before a bound counts as violated
VIOLATION_TOL = 1e-8


class BoundId(str, Enum):
    """Every upper bound on |T(f,g)| in the catalogue, in catalogue order."""
    CEBYSEV_112 = 'Cebysev112'
    LUPAS_1_PI_SQ = 'Lupas1PiSq'
    OSTROWSKI_18 = 'Ostrowski18'
    PP_BASIC = 'PPbasic'
    PP_GAMMA = 'PPgamma'
    PP_GAMMA_Q1_EQ_P = 'PPgammaQ1eqP'
    PP_GAMMA_Q1_EQ_Q = 'PPgammaQ1eqQ'
    BMV = 'BMV'
    THM4 = 'Thm4'
    THM5 = 'Thm5'
    THM6_LP = 'Thm6Lp'
    THM6_L1 = 'Thm6L1'
    THM7_LINF = 'Thm7Linf'
    THM7_LP = 'Thm7Lp'
    THM7_L1 = 'Thm7L1'
    REMARK_S = 'RemarkS'

    @property
    def order(self):
        return list(BoundId).index(self)


def exponent_sort_key(p):
    """Finite exponents ascending, inf last, missing exponents first."""
    if p is None:
        return (0, 0.0)
    return (2, 0.0) if math.isinf(p) else (1, p)


@dataclass(frozen=True)
class NormFactor:
    role: str        # "f'", "g'" or "f range"
    exponent: float
    value: float

    def label(self):
        if self.role == 'f range':
            return 'M-m'
        return f"||{self.role}||_{format_exponent(self.exponent)}"


@dataclass(frozen=True)
class BoundEvaluation:
    id: BoundId
    exponents: Optional[ConjugatePair]
    pair1: Optional[ConjugatePair]
    constant: float
    printed_constant: float
    norm_factors: Tuple[NormFactor, ...]
    value: float
    applicable: bool
    reason: str = ''
    rescaled: bool = False

    @property
    def sort_key(self):
        p = self.exponents.p if self.exponents else None
        p1 = self.pair1.p if self.pair1 else None
        return (self.id.order, exponent_sort_key(p), exponent_sort_key(p1))

    @property
    def printed_value(self):
        if not self.applicable:
            return math.nan
        product = 1.0
        for factor in self.norm_factors:
            product *= factor.value
        return self.printed_constant * product


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of checking every applicable bound for one (f, g) pair."""
    f_label: str
    g_label: str
    interval: Interval
    t_value: float
    t_parts: float
    evaluations: Tuple[BoundEvaluation, ...] = field(default_factory=tuple)

    @property
    def t_abs(self):
        return abs(self.t_value)

    def slack(self, evaluation):
        return evaluation.value - self.t_abs

    def is_violated(self, evaluation):
        if not evaluation.applicable:
            return False
        return self.slack(evaluation) < -VIOLATION_TOL * max(1.0, evaluation.value)

    @property
    def violations(self):
        return [ev for ev in self.evaluations if self.is_violated(ev)]

    @property
    def passed(self):
        return not self.violations


@dataclass(frozen=True)
class SubintervalGeometry:
    """Relative position of [c, d] inside [a, b]: v, rho, lambda sum to 1."""
    v: float
    rho: float
    lam: float

    @classmethod
    def from_intervals(cls, outer, inner):
        length = outer.length
        return cls(
            v=(inner.a - outer.a) / length,
            rho=inner.length / length,
            lam=(outer.b - inner.b) / length,
        )
