"""The Čebyšev functional T(f, g) and integral-mean differences."""
import logging

import numpy as np
from scipy.interpolate import CubicHermiteSpline

from cheby.errors import DomainError, NonConvergence
from cheby.models.function import TRoute, TValue
from cheby.models.interval import Interval, Tolerance
from cheby.utils.numerics import breakpoints_within, evaluate, gauss_kronrod_cells, integrate, segment_edges

logger = logging.getLogger(__name__)

# Cells per breakpoint segment on the first pass of the parts route
PARTS_INITIAL_CELLS = 16
PARTS_MAX_CELLS = 1 << 17
PARTS_TOL = 1e-10


def joint_breakpoints(f, g, iv):
    return sorted(set(breakpoints_within(f.breakpoints, iv)) | set(breakpoints_within(g.breakpoints, iv)))


def cheb_T(f, g, iv, tol=None):
    """T(f,g) = mean(fg) - mean(f) mean(g) over iv, by direct quadrature."""
    tol = tol or Tolerance.default()
    points = joint_breakpoints(f, g, iv)
    length = iv.length

    fg = integrate(lambda x: evaluate(f.value, x) * evaluate(g.value, x), iv, points, tol)
    int_f = integrate(f.value, iv, points, tol)
    int_g = integrate(g.value, iv, points, tol)

    value = fg.value / length - (int_f.value / length) * (int_g.value / length)
    error = (fg.error_estimate / length
             + abs(int_g.value) * int_f.error_estimate / length ** 2
             + abs(int_f.value) * int_g.error_estimate / length ** 2)
    return TValue(value, TRoute.IDENTITY, error)


def _grid(edges, cells_per_segment):
    pieces = [np.linspace(left, right, cells_per_segment + 1)[:-1]
              for left, right in zip(edges[:-1], edges[1:])]
    return np.concatenate(pieces + [np.array([edges[-1]])])


def _parts_pass(f, g, iv, nodes):
    # Step 1: cumulative integral G(t) = int_a^t g on the grid
    cells, _ = gauss_kronrod_cells(g.value, nodes)
    cumulative = np.concatenate([[0.0], np.cumsum(cells)])
    total = cumulative[-1]
    spline = CubicHermiteSpline(nodes, cumulative, evaluate(g.value, nodes))

    # Step 2: outer integral of the kernel against f'
    a, length = iv.a, iv.length

    def integrand(t):
        kernel = spline(t) - (t - a) / length * total
        return kernel * evaluate(f.derivative, t)

    outer, _ = gauss_kronrod_cells(integrand, nodes)
    return -float(np.sum(outer)) / length


def cheb_T_parts(f, g, iv, tol=None):
    """T(f,g) through the integration-by-parts identity.

    T = -(1/(b-a)) int_a^b (G(t) - (t-a)/(b-a) G(b)) f'(t) dt, G(t) = int_a^t g.
    G is tabulated on a grid containing every breakpoint and interpolated by
    cubic Hermite pieces with the exact slopes g. The grid doubles until two
    successive values agree.
    """
    edges = segment_edges(iv, joint_breakpoints(f, g, iv))
    cells = PARTS_INITIAL_CELLS
    previous = None
    while cells * (len(edges) - 1) <= PARTS_MAX_CELLS:
        value = _parts_pass(f, g, iv, _grid(edges, cells))
        if not np.isfinite(value):
            raise NonConvergence(f"cheb_T_parts met non-finite values on {iv}", estimate=value)
        if previous is not None:
            change = abs(value - previous)
            if change <= PARTS_TOL * max(1.0, abs(value)):
                return TValue(value, TRoute.PARTS_KERNEL, change)
        previous = value
        cells *= 2
    logger.warning(f"Parts route for ({f.label}, {g.label}) did not settle on {iv}")
    raise NonConvergence(
        f"cheb_T_parts did not converge on {iv}",
        estimate=previous, subdivisions=cells // 2 * (len(edges) - 1),
    )


def mean_difference(f, outer, inner, tol=None):
    """mean of f over outer minus mean of f over inner."""
    if not outer.contains(inner):
        raise DomainError(f"{inner} is not contained in {outer}")
    outer_integral = integrate(f.value, outer, breakpoints_within(f.breakpoints, outer), tol).value
    inner_integral = integrate(f.value, inner, breakpoints_within(f.breakpoints, inner), tol).value
    return outer_integral / outer.length - inner_integral / inner.length


def parts_kernel(g, iv, t, tol=None):
    """(t-a) * (mean of g over [a,t] - mean of g over [a,b])."""
    if not iv.a <= t <= iv.b:
        raise DomainError(f"t={t} lies outside {iv}")
    if t == iv.a:
        return 0.0
    return (t - iv.a) * -mean_difference(g, iv, Interval(iv.a, t), tol)
