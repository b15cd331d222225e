"""Adaptive quadrature, Lp norms and Gamma/Beta functions."""
import heapq
import logging
import math

import numpy as np
from scipy.optimize import minimize_scalar

from cheby.errors import DomainError, NonConvergence
from cheby.models.function import INF
from cheby.models.interval import Interval, QuadResult, Tolerance

logger = logging.getLogger(__name__)

# Kronrod 15-point abscissae on [-1, 1] (nonnegative half, descending).
# Odd indices are the 7-point Gauss abscissae.
KRONROD_NODES = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
KRONROD_WEIGHTS = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
GAUSS_WEIGHTS = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# Full 15-node rule laid out left to right
_NODES_15 = np.concatenate([-KRONROD_NODES[:-1], KRONROD_NODES[::-1]])
_KRONROD_15 = np.concatenate([KRONROD_WEIGHTS[:-1], KRONROD_WEIGHTS[::-1]])
_GAUSS_15 = np.zeros(15)
_GAUSS_15[[1, 3, 5]] = GAUSS_WEIGHTS[:3]
_GAUSS_15[7] = GAUSS_WEIGHTS[3]
_GAUSS_15[[9, 11, 13]] = GAUSS_WEIGHTS[2::-1]

# Degree of polynomials integrated exactly by the Kronrod rule
KRONROD_EXACTNESS = 22

# Lanczos approximation, g = 7, n = 9 (relative accuracy ~1e-15 for real x > 0)
LANCZOS_G = 7
LANCZOS_COEFFICIENTS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)
# Gamma overflows a double past this argument
GAMMA_OVERFLOW = 171.6

SUP_SAMPLES = 513
# One-sided limits at segment ends are read this far inside (relative to width)
SUP_NUDGE = 1e-12


def evaluate(h, x):
    """Evaluate a vectorised callable, broadcasting scalar results to x's shape."""
    x = np.asarray(x, dtype=float)
    values = np.asarray(h(x), dtype=float)
    if values.shape != x.shape:
        values = np.broadcast_to(values, x.shape).copy()
    return values


def breakpoints_within(points, iv):
    """Breakpoints strictly inside iv."""
    return sorted(x for x in points if iv.a < x < iv.b)


def segment_edges(iv, breakpoints=()):
    """Endpoints of the breakpoint-delimited segments of iv."""
    if not isinstance(iv, Interval):
        raise DomainError(f"Expected an Interval, got {iv!r}")
    inner = set()
    for x in breakpoints:
        x = float(x)
        if not iv.a <= x <= iv.b:
            raise DomainError(f"Breakpoint {x} lies outside {iv}")
        if iv.a < x < iv.b:
            inner.add(x)
    return [iv.a] + sorted(inner) + [iv.b]


def gauss_kronrod_cells(h, edges):
    """Apply the 7/15 rule on every cell [edges[i], edges[i+1]] at once.

    Returns:
        (values, errors): Kronrod estimates and |Kronrod - Gauss| per cell
    """
    edges = np.asarray(edges, dtype=float)
    left, right = edges[:-1], edges[1:]
    half = 0.5 * (right - left)
    centre = 0.5 * (right + left)
    x = centre[:, None] + half[:, None] * _NODES_15[None, :]
    fx = evaluate(h, x)
    kronrod = half * (fx @ _KRONROD_15)
    gauss = half * (fx @ _GAUSS_15)
    return kronrod, np.abs(kronrod - gauss)


def _cell_rule(h, left, right):
    values, errors = gauss_kronrod_cells(h, (left, right))
    return float(values[0]), float(errors[0])


def integrate(h, iv, breakpoints=(), tol=None):
    """Integrate h over iv by globally adaptive Gauss-Kronrod bisection.

    The interval is first split at every breakpoint. The cell with the largest
    error estimate is bisected until the summed error meets the tolerance.

    Args:
        h: Vectorised callable
        iv: Integration interval
        breakpoints: Points of nonsmoothness inside iv
        tol: Stopping rule (defaults to Tolerance.default())

    Returns:
        QuadResult
    """
    tol = tol or Tolerance.default()
    edges = segment_edges(iv, breakpoints)

    values, errors = gauss_kronrod_cells(h, edges)
    heap = []
    for left, right, value, error in zip(edges[:-1], edges[1:], values, errors):
        heapq.heappush(heap, (-float(error), left, right, float(value)))
    frozen = []
    total = float(np.sum(values))
    total_error = float(np.sum(errors))
    subdivisions = len(heap)

    while total_error > tol.threshold(total):
        if not heap:
            break
        if subdivisions >= tol.max_subdivisions:
            break
        neg_error, left, right, value = heapq.heappop(heap)
        mid = 0.5 * (left + right)
        if not left < mid < right:
            # Cell at floating-point resolution, its error cannot shrink
            frozen.append((neg_error, left, right, value))
            continue
        left_value, left_error = _cell_rule(h, left, mid)
        right_value, right_error = _cell_rule(h, mid, right)
        heapq.heappush(heap, (-left_error, left, mid, left_value))
        heapq.heappush(heap, (-right_error, mid, right, right_value))
        total += left_value + right_value - value
        total_error += left_error + right_error + neg_error
        subdivisions += 1

    cells = heap + frozen
    total = math.fsum(cell[3] for cell in cells)
    total_error = math.fsum(-cell[0] for cell in cells)
    if not (math.isfinite(total) and math.isfinite(total_error)):
        logger.warning(f"Quadrature on {iv} met non-finite integrand values")
        raise NonConvergence(
            f"integrate met non-finite values on {iv}",
            estimate=total, error_estimate=total_error, subdivisions=subdivisions,
        )
    if total_error > tol.threshold(total):
        logger.warning(f"Quadrature on {iv} stopped at error {total_error:.3e} after {subdivisions} subintervals")
        raise NonConvergence(
            f"integrate did not converge on {iv}: error {total_error:.3e} after {subdivisions} subintervals",
            estimate=total, error_estimate=total_error, subdivisions=subdivisions,
        )
    return QuadResult(total, total_error, subdivisions)


def essential_sup(h, iv, breakpoints=()):
    """Estimate sup |h| over iv, taking one-sided limits at breakpoints.

    Each segment is sampled at SUP_SAMPLES points, then the best sample's
    neighbourhood is refined by a bounded scalar maximisation.
    """
    edges = segment_edges(iv, breakpoints)
    best = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        nudge = SUP_NUDGE * (right - left)
        lo, hi = left + nudge, right - nudge
        grid = np.linspace(lo, hi, SUP_SAMPLES)
        samples = np.abs(evaluate(h, grid))
        if not np.all(np.isfinite(samples)):
            return INF
        k = int(np.argmax(samples))
        segment_best = float(samples[k])
        bracket = (grid[max(k - 1, 0)], grid[min(k + 1, SUP_SAMPLES - 1)])
        if bracket[0] < bracket[1]:
            refined = minimize_scalar(
                lambda x: -abs(float(evaluate(h, x))),
                bounds=bracket, method='bounded', options={'xatol': 1e-12 * (right - left)},
            )
            if refined.success:
                segment_best = max(segment_best, -float(refined.fun))
        best = max(best, segment_best)
    return best


def lp_norm(h, iv, breakpoints=(), p=2.0, tol=None):
    """Lp norm of h over iv, p in [1, inf].

    For p > 1 the integrand is divided by the essential sup first, so
    |h|**p cannot overflow for large finite p.
    """
    if p != INF and not p >= 1:
        raise DomainError(f"lp_norm requires p >= 1, got {p}")
    if p == INF:
        return essential_sup(h, iv, breakpoints)
    if p == 1:
        return integrate(lambda x: np.abs(evaluate(h, x)), iv, breakpoints, tol).value
    scale = essential_sup(h, iv, breakpoints)
    if scale == 0.0:
        return 0.0
    if scale == INF:
        scale = 1.0
    result = integrate(lambda x: (np.abs(evaluate(h, x)) / scale) ** p, iv, breakpoints, tol)
    return scale * max(result.value, 0.0) ** (1.0 / p)


def _check_positive(name, x):
    try:
        value = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"{name} requires a real argument, got {x!r}")
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"{name} requires a positive finite argument, got {x!r}")


def _lanczos_sum(z):
    """Series part of the Lanczos approximation at z = x - 1."""
    total = LANCZOS_COEFFICIENTS[0]
    for i in range(1, len(LANCZOS_COEFFICIENTS)):
        total += LANCZOS_COEFFICIENTS[i] / (z + i)
    return total


def gamma(x):
    """Gamma function for real x > 0 (returns inf past the double range)."""
    _check_positive('gamma', x)
    x = float(x)
    if x < 0.5:
        # Reflection
        return math.pi / (math.sin(math.pi * x) * gamma(1.0 - x))
    if x > GAMMA_OVERFLOW:
        return INF
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    # t**(z+0.5) overflows before Gamma does, so apply it in two halves
    half_power = t ** (0.5 * (z + 0.5))
    return math.sqrt(2.0 * math.pi) * (half_power * math.exp(-t)) * half_power * _lanczos_sum(z)


def log_gamma(x):
    """log Gamma(x) for real x > 0."""
    _check_positive('log_gamma', x)
    x = float(x)
    if x < 0.5:
        return math.log(math.pi / math.sin(math.pi * x)) - log_gamma(1.0 - x)
    z = x - 1.0
    t = z + LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def log_beta(x, y):
    _check_positive('log_beta', x)
    _check_positive('log_beta', y)
    return log_gamma(x) + log_gamma(y) - log_gamma(x + y)


def beta(x, y):
    """Beta function B(x, y) = Gamma(x)Gamma(y)/Gamma(x+y)."""
    _check_positive('beta', x)
    _check_positive('beta', y)
    if x + y < GAMMA_OVERFLOW:
        return gamma(x) * gamma(y) / gamma(x + y)
    return math.exp(log_beta(x, y))


def beta_power(x, y, power):
    """B(x, y) ** power, formed in log space."""
    return math.exp(power * log_beta(x, y))
