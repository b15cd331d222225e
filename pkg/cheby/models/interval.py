"""Interval, tolerance and quadrature result types."""
import math
from dataclasses import dataclass

from cheby.errors import DomainError

DEFAULT_ABS_TOL = 1e-11
DEFAULT_REL_TOL = 1e-10
DEFAULT_MAX_SUBDIVISIONS = 2000


@dataclass(frozen=True)
class Interval:
    """A finite closed interval [a, b] with a < b."""
    a: float
    b: float

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        if not (math.isfinite(a) and math.isfinite(b)):
            raise DomainError(f"Interval endpoints must be finite, got [{self.a}, {self.b}]")
        if not a < b:
            raise DomainError(f"Interval requires a < b, got [{self.a}, {self.b}]")
        object.__setattr__(self, 'a', a)
        object.__setattr__(self, 'b', b)

    @classmethod
    def unit(cls):
        return cls(0.0, 1.0)

    @property
    def length(self):
        return self.b - self.a

    @property
    def midpoint(self):
        return 0.5 * (self.a + self.b)

    def contains(self, other):
        """True if `other` (an Interval or a point) lies inside this interval."""
        if isinstance(other, Interval):
            return self.a <= other.a and other.b <= self.b
        return self.a <= other <= self.b

    def check_points(self, count=17):
        """Equally spaced points including both endpoints."""
        step = self.length / (count - 1)
        return [self.a + i * step for i in range(count - 1)] + [self.b]

    def is_unit(self):
        return self.a == 0.0 and self.b == 1.0

    def __str__(self):
        return f"[{self.a:g}, {self.b:g}]"


@dataclass(frozen=True)
class Tolerance:
    """Stopping rule for adaptive quadrature."""
    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise DomainError("Tolerances must be nonnegative")
        if self.abs_tol == 0 and self.rel_tol == 0:
            raise DomainError("At least one of abs_tol, rel_tol must be positive")
        if int(self.max_subdivisions) < 1:
            raise DomainError(f"max_subdivisions must be positive, got {self.max_subdivisions}")

    @classmethod
    def default(cls):
        return cls()

    @classmethod
    def from_config(cls, config):
        """Build a tolerance from a Config-like object."""
        return cls(
            abs_tol=getattr(config, 'ABS_TOL', DEFAULT_ABS_TOL),
            rel_tol=getattr(config, 'REL_TOL', DEFAULT_REL_TOL),
            max_subdivisions=getattr(config, 'MAX_SUBDIVISIONS', DEFAULT_MAX_SUBDIVISIONS),
        )

    def threshold(self, value):
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    subdivisions_used: int
