"""Function and exponent types."""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Dict, Optional, Tuple

from cheby.errors import DomainError
from cheby.models.interval import Interval

INF = math.inf

CONJUGACY_TOL = 1e-12


def reciprocal(p):
    """1/p with 1/inf := 0."""
    return 0.0 if p == INF else 1.0 / p


def conjugate(p):
    """Hölder conjugate of p in [1, inf]."""
    if p == INF:
        return 1.0
    if p == 1:
        return INF
    if p < 1:
        raise DomainError(f"Exponent must be >= 1, got {p}")
    return p / (p - 1.0)


def format_exponent(p):
    return 'inf' if p == INF else f"{p:g}"


@dataclass(frozen=True)
class ConjugatePair:
    """Exponents (p, q) with 1/p + 1/q = 1, inf allowed on either side."""
    p: float
    q: float

    def __post_init__(self):
        for name, value in (('p', self.p), ('q', self.q)):
            if math.isnan(value) or value < 1:
                raise DomainError(f"Exponent {name} must lie in [1, inf], got {value}")
        if abs(reciprocal(self.p) + reciprocal(self.q) - 1.0) > CONJUGACY_TOL:
            raise DomainError(f"({self.p}, {self.q}) is not a conjugate pair")

    @classmethod
    def from_p(cls, p):
        p = float(p)
        return cls(p, conjugate(p))

    @property
    def is_degenerate(self):
        return self.p == 1 or self.q == 1

    def label(self):
        return f"({format_exponent(self.p)}, {format_exponent(self.q)})"


class RampKind(str, Enum):
    AFFINE_EXTENSION = 'AffineExtension'
    CLAMPED_RAMP = 'ClampedRamp'


@dataclass(frozen=True)
class RampVariant:
    kind: RampKind
    epsilon: float

    def __post_init__(self):
        object.__setattr__(self, 'kind', RampKind(self.kind))
        if not 0.0 < self.epsilon < 0.5:
            raise DomainError(f"epsilon must lie in (0, 1/2), got {self.epsilon}")


@dataclass(frozen=True, eq=False)
class FunctionSpec:
    """An absolutely continuous function on an interval.

    `value` and `derivative` accept scalars or numpy arrays. `derivative` may be
    undefined at the breakpoints. `exact_norms` maps an exponent to the closed-form
    Lp norm of the derivative over `interval`.
    """
    value: Callable
    derivative: Callable
    interval: Interval
    breakpoints: Tuple[float, ...] = ()
    range_bounds: Optional[Tuple[float, float]] = None
    exact_norms: Dict[float, float] = field(default_factory=dict)
    label: str = ''

    def __post_init__(self):
        object.__setattr__(self, 'breakpoints', tuple(sorted(float(x) for x in self.breakpoints)))
        if self.range_bounds is not None:
            m, big_m = self.range_bounds
            if m > big_m:
                raise DomainError(f"range_bounds must satisfy m <= M, got {self.range_bounds}")

    def __call__(self, x):
        return self.value(x)

    def __repr__(self):
        return f"FunctionSpec({self.label or '?'} on {self.interval})"


class TRoute(str, Enum):
    IDENTITY = 'Identity'
    PARTS_KERNEL = 'PartsKernel'


@dataclass(frozen=True)
class TValue:
    """A value of the Čebyšev functional and the route that produced it."""
    value: float
    route: TRoute
    error_estimate: float = 0.0
