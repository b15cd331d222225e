"""Constructors for the absolutely continuous test functions.

Every constructor returns an immutable FunctionSpec whose evaluators accept
numpy arrays. Closed-form derivative norms are attached whenever they are
known so that bounds are evaluated from exact values.
"""
import logging
import math

import numpy as np
from numpy.polynomial import Polynomial

from cheby.errors import DomainError
from cheby.models.function import INF, FunctionSpec, RampKind, RampVariant
from cheby.models.interval import Interval
from cheby.utils.numerics import breakpoints_within, integrate, lp_norm

logger = logging.getLogger(__name__)

# Smoothing width of the mollified |x - c| kink
KINK_WIDTH = 1e-3

CONTINUITY_TOL = 1e-9
ABSOLUTE_CONTINUITY_TOL = 1e-8
RANGE_TOL = 1e-9
CHECK_POINT_COUNT = 17

CORPUS_KINDS = ('poly', 'trig', 'exp', 'ramp', 'kink')
CORPUS_RAMP_EPSILONS = (0.05, 0.1, 0.25)
CORPUS_TRIG_FREQUENCIES = (1, 2, 3)
CORPUS_MAX_DEGREE = 5
CORPUS_COEFF_RANGE = 2.0

NAMED_FUNCTIONS = ('identity', 'square', 'cosine', 'ramp', 'constant')


def _fmt(values):
    return ','.join(f"{v:.4g}" for v in values)


def _real_roots(poly, iv):
    if not np.any(poly.coef):
        return []
    # Negligible leading coefficients would blow up the companion matrix
    poly = poly.trim(1e-13 * float(np.max(np.abs(poly.coef))))
    roots = poly.roots()
    return [float(r.real) for r in np.atleast_1d(roots)
            if abs(r.imag) < 1e-12 and iv.a < r.real < iv.b]


def make_polynomial(coefficients, iv, label=None):
    """Polynomial sum(c_k x**k) on iv with exact range and derivative norms.

    Args:
        coefficients: Ascending coefficients, at least one
        iv: Domain interval

    Returns:
        FunctionSpec with empty breakpoints
    """
    if len(coefficients) == 0:
        raise DomainError("make_polynomial needs at least one coefficient")
    poly = Polynomial([float(c) for c in coefficients])
    deriv = poly.deriv()

    candidates = [iv.a, iv.b] + _real_roots(deriv, iv)
    values = [float(poly(x)) for x in candidates]

    slope_candidates = [iv.a, iv.b] + _real_roots(deriv.deriv(), iv)
    sup_slope = max(abs(float(deriv(x))) for x in slope_candidates)
    square = (deriv * deriv).integ()
    l2 = math.sqrt(max(float(square(iv.b) - square(iv.a)), 0.0))

    return FunctionSpec(
        value=poly,
        derivative=deriv,
        interval=iv,
        range_bounds=(min(values), max(values)),
        exact_norms={2.0: l2, INF: sup_slope},
        label=label or f"poly[{_fmt(poly.coef)}]",
    )


def make_identity(iv):
    return make_polynomial([0.0, 1.0], iv, label='x')


def make_constant(c, iv):
    return make_polynomial([c], iv, label=f"const[{c:g}]")


def make_ramp(epsilon, center, iv, label=None):
    """Clamped ramp rising from 0 to 1 over a window of half-width epsilon.

    epsilon and center are measured in unit coordinates u = (x-a)/(b-a); the
    window [center-epsilon, center+epsilon] must fit inside [0, 1].
    """
    if not 0.0 < epsilon < 0.5:
        raise DomainError(f"ramp epsilon must lie in (0, 1/2), got {epsilon}")
    if not epsilon - 1e-15 <= center <= 1.0 - epsilon + 1e-15:
        raise DomainError(f"ramp window around {center} with half-width {epsilon} leaves [0, 1]")
    length = iv.length
    lo = iv.a + (center - epsilon) * length
    hi = iv.a + (center + epsilon) * length
    width = hi - lo
    density = 1.0 / width

    def value(x):
        return np.clip((np.asarray(x, dtype=float) - lo) * density, 0.0, 1.0)

    def derivative(x):
        x = np.asarray(x, dtype=float)
        return np.where((x > lo) & (x < hi), density, 0.0)

    return FunctionSpec(
        value=value,
        derivative=derivative,
        interval=iv,
        breakpoints=tuple(p for p in (lo, hi) if iv.a < p < iv.b),
        range_bounds=(0.0, 1.0),
        exact_norms={1.0: 1.0, 2.0: math.sqrt(density), INF: density},
        label=label or f"ramp[eps={epsilon:g},c={center:.4g}]",
    )


def make_example1_pair(variant):
    """The pair (f, g) of the sharpness counterexample on [0, 1].

    g is the identity. ClampedRamp gives f = 0, ramp, 1 around 1/2;
    AffineExtension continues the ramp formula over all of [0, 1].
    """
    if not isinstance(variant, RampVariant):
        raise DomainError(f"Expected a RampVariant, got {variant!r}")
    eps = variant.epsilon
    iv = Interval.unit()
    g = make_identity(iv)
    if variant.kind == RampKind.CLAMPED_RAMP:
        f = make_ramp(eps, 0.5, iv, label=f"clamped[eps={eps:g}]")
    else:
        slope = 1.0 / (2.0 * eps)
        f = make_polynomial([(eps - 0.5) * slope, slope], iv, label=f"affine[eps={eps:g}]")
        f.exact_norms[1.0] = slope
    return f, g


def _cos_range(lo, hi):
    """(min, max) of cos on [lo, hi]."""
    values = [math.cos(lo), math.cos(hi)]
    m = math.ceil(lo / math.pi)
    while m * math.pi <= hi:
        values.append(1.0 if m % 2 == 0 else -1.0)
        m += 1
    return min(values), max(values)


def make_cosine(frequency, phase, iv, label=None):
    """cos(frequency*pi*(x-a)/(b-a) + phase) for real frequency > 0."""
    if not frequency > 0:
        raise DomainError(f"frequency must be positive, got {frequency}")
    omega = frequency * math.pi / iv.length
    a = iv.a

    def value(x):
        return np.cos(omega * (np.asarray(x, dtype=float) - a) + phase)

    def derivative(x):
        return -omega * np.sin(omega * (np.asarray(x, dtype=float) - a) + phase)

    lo, hi = phase, frequency * math.pi + phase
    sin_min, sin_max = _cos_range(lo - math.pi / 2, hi - math.pi / 2)

    # int sin^2 over [lo, hi]
    sin_sq = 0.5 * (hi - lo) - 0.25 * (math.sin(2 * hi) - math.sin(2 * lo))
    norms = {
        2.0: omega * math.sqrt(max(sin_sq, 0.0) / omega),
        INF: omega * max(abs(sin_min), abs(sin_max)),
    }
    return FunctionSpec(
        value=value,
        derivative=derivative,
        interval=iv,
        range_bounds=_cos_range(lo, hi),
        exact_norms=norms,
        label=label or f"cos[w={frequency:.4g},phi={phase:.4g}]",
    )


def make_trig(k, phase, iv):
    """cos(k*pi*(x-a)/(b-a) + phase) for a positive integer frequency k."""
    if int(k) != k or k < 1:
        raise DomainError(f"trig frequency must be a positive integer, got {k}")
    f = make_cosine(float(k), phase, iv, label=f"trig[k={int(k)},phi={phase:.4g}]")
    # k half-periods of |sin| integrate to 2k after the chain rule
    f.exact_norms[1.0] = 2.0 * k
    return f


def make_exponential(rate, iv, label=None):
    """exp(rate*(x-a)/(b-a))."""
    length = iv.length
    a = iv.a

    def value(x):
        return np.exp(rate * (np.asarray(x, dtype=float) - a) / length)

    def derivative(x):
        return (rate / length) * np.exp(rate * (np.asarray(x, dtype=float) - a) / length)

    end = math.exp(rate)
    return FunctionSpec(
        value=value,
        derivative=derivative,
        interval=iv,
        range_bounds=(min(1.0, end), max(1.0, end)),
        exact_norms={INF: abs(rate) / length * max(1.0, end)},
        label=label or f"exp[r={rate:.4g}]",
    )


def make_kink(center, iv, width=KINK_WIDTH, label=None):
    """Mollified |u - center| with u = (x-a)/(b-a)."""
    length = iv.length
    a = iv.a

    def value(x):
        u = (np.asarray(x, dtype=float) - a) / length
        return np.sqrt((u - center) ** 2 + width ** 2)

    def derivative(x):
        u = (np.asarray(x, dtype=float) - a) / length
        return (u - center) / np.sqrt((u - center) ** 2 + width ** 2) / length

    ends = [math.hypot(0.0 - center, width), math.hypot(1.0 - center, width)]
    low = width if 0.0 <= center <= 1.0 else min(ends)
    far = max(abs(center), abs(1.0 - center))
    return FunctionSpec(
        value=value,
        derivative=derivative,
        interval=iv,
        range_bounds=(low, max(ends)),
        exact_norms={INF: far / math.hypot(far, width) / length},
        label=label or f"kink[c={center:.4g}]",
    )


def make_named(name, iv):
    """Functions addressable by name from the command line."""
    if name == 'identity':
        return make_identity(iv)
    if name == 'square':
        return make_polynomial([0.0, 0.0, 1.0], iv, label='x^2')
    if name == 'cosine':
        return make_trig(1, 0.0, iv)
    if name == 'ramp':
        return make_ramp(0.1, 0.5, iv)
    if name == 'constant':
        return make_constant(1.0, iv)
    raise DomainError(f"Unknown function {name!r}, expected one of {', '.join(NAMED_FUNCTIONS)}")


def _random_member(kind, rng, iv):
    if kind == 'poly':
        degree = int(rng.integers(1, CORPUS_MAX_DEGREE + 1))
        coefficients = rng.uniform(-CORPUS_COEFF_RANGE, CORPUS_COEFF_RANGE, degree + 1)
        return make_polynomial(coefficients.tolist(), iv)
    if kind == 'trig':
        k = int(rng.choice(CORPUS_TRIG_FREQUENCIES))
        return make_trig(k, float(rng.uniform(-math.pi, math.pi)), iv)
    if kind == 'exp':
        return make_exponential(float(rng.uniform(-2.0, 2.0)), iv)
    if kind == 'ramp':
        eps = float(rng.choice(CORPUS_RAMP_EPSILONS))
        center = eps + float(rng.uniform()) * (1.0 - 2.0 * eps)
        return make_ramp(eps, center, iv)
    return make_kink(float(rng.uniform(0.1, 0.9)), iv)


def corpus(seed, count, iv=None):
    """Deterministic pseudo-random mix of test functions.

    Members are drawn on [0, 1] and carried to iv by affine_rescale, so the
    same seed gives the same shapes on every interval.
    """
    if count < 1:
        raise DomainError(f"corpus size must be >= 1, got {count}")
    iv = iv or Interval.unit()
    unit = Interval.unit()
    rng = np.random.default_rng(seed)
    members = []
    for i in range(count):
        kind = CORPUS_KINDS[int(rng.integers(len(CORPUS_KINDS)))]
        member = _random_member(kind, rng, unit)
        if not iv.is_unit():
            member = affine_rescale(member, unit, iv)
        members.append(member)
    logger.info(f"Built corpus of {count} functions (seed={seed}) on {iv}")
    return members


def affine_rescale(f, source, target):
    """Carry f from `source` to `target` through the increasing affine map.

    The result is F(y) = f(phi(y)) where phi sends target onto source, so
    F'(y) = slope * f'(phi(y)) with slope = |source| / |target|.
    """
    if not f.interval.contains(source):
        raise DomainError(f"{f!r} is not defined on {source}")
    slope = source.length / target.length
    sa, ta = source.a, target.a

    def to_source(y):
        return sa + (np.asarray(y, dtype=float) - ta) * slope

    def value(y):
        return f.value(to_source(y))

    def derivative(y):
        return slope * f.derivative(to_source(y))

    breakpoints = [ta + (x - sa) / slope for x in f.breakpoints if source.a < x < source.b]
    norms = {}
    if f.interval == source:
        for p, norm in f.exact_norms.items():
            norms[p] = norm * (slope if p == INF else slope ** (1.0 - 1.0 / p))
    return FunctionSpec(
        value=value,
        derivative=derivative,
        interval=target,
        breakpoints=tuple(breakpoints),
        range_bounds=f.range_bounds,
        exact_norms=norms,
        label=f.label,
    )


def scale_function(f, alpha, offset=0.0):
    """alpha*f + offset with derivative, range and norms carried along."""
    def value(x):
        return alpha * np.asarray(f.value(x), dtype=float) + offset

    def derivative(x):
        return alpha * np.asarray(f.derivative(x), dtype=float)

    range_bounds = None
    if f.range_bounds is not None:
        ends = sorted((alpha * f.range_bounds[0] + offset, alpha * f.range_bounds[1] + offset))
        range_bounds = (ends[0], ends[1])
    return FunctionSpec(
        value=value,
        derivative=derivative,
        interval=f.interval,
        breakpoints=f.breakpoints,
        range_bounds=range_bounds,
        exact_norms={p: abs(alpha) * n for p, n in f.exact_norms.items()},
        label=f"{alpha:g}*{f.label}+{offset:g}",
    )


def derivative_norm(f, p, iv=None, tol=None):
    """||f'||_p over iv, taken from exact_norms when available."""
    iv = iv or f.interval
    if iv == f.interval and p in f.exact_norms:
        return f.exact_norms[p]
    return lp_norm(f.derivative, iv, breakpoints_within(f.breakpoints, iv), p, tol)


def absolute_continuity_defect(f, tol=None):
    """max |f(x) - f(a) - int_a^x f'| over the check points (inf if f is not finite there)."""
    iv = f.interval
    start = float(f.value(iv.a))
    worst = 0.0
    for x in iv.check_points(CHECK_POINT_COUNT)[1:]:
        part = Interval(iv.a, x)
        integral = integrate(f.derivative, part, breakpoints_within(f.breakpoints, part), tol).value
        defect = abs(float(f.value(x)) - start - integral)
        if not math.isfinite(defect):
            return INF
        worst = max(worst, defect)
    return worst


def validate_spec(f, tol=None):
    """Check continuity, absolute continuity and range metadata of f.

    Raises:
        DomainError: if any check fails
    """
    iv = f.interval
    for x in f.breakpoints:
        h = 1e-12 * iv.length
        jump = abs(float(f.value(x - h)) - float(f.value(x + h)))
        if not jump <= CONTINUITY_TOL:
            raise DomainError(f"{f.label} jumps by {jump:.3e} at {x}")

    defect = absolute_continuity_defect(f, tol)
    if not defect <= ABSOLUTE_CONTINUITY_TOL:
        raise DomainError(f"{f.label} fails the absolute-continuity check ({defect:.3e})")

    if f.range_bounds is not None:
        m, big_m = f.range_bounds
        samples = np.asarray(f.value(np.linspace(iv.a, iv.b, 513)), dtype=float)
        if samples.min() < m - RANGE_TOL or samples.max() > big_m + RANGE_TOL:
            raise DomainError(f"{f.label} leaves its declared range {f.range_bounds}")
    return defect
