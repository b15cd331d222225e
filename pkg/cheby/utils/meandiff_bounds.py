"""Bounds on the difference between two integral means of f.

For [c, d] inside [a, b] the quantity bounded is
mean_[a,b] f - mean_[c,d] f, see functional.mean_difference.
"""
import logging

from cheby.errors import DomainError
from cheby.models.bounds import SubintervalGeometry
from cheby.models.function import INF, conjugate
from cheby.utils.funcspace import derivative_norm

logger = logging.getLogger(__name__)


def _check_nested(outer, inner):
    if not outer.contains(inner):
        raise DomainError(f"{inner} is not contained in {outer}")


def barnett_bound(f, outer, inner, tol=None):
    """The sup-norm pair of bounds (first, second), first <= second.

    Both are 0 when inner == outer, where the first formula is 0 * (0/0).
    """
    _check_nested(outer, inner)
    if inner == outer:
        return 0.0, 0.0
    norm = derivative_norm(f, INF, outer, tol)
    gap = outer.length - inner.length
    offset = (outer.midpoint - inner.midpoint) / gap
    first = (0.25 + offset ** 2) * gap * norm
    second = 0.5 * gap * norm
    return first, second


def _l1_branch(f, outer, geometry, tol):
    norm = derivative_norm(f, 1.0, outer, tol)
    return 0.5 * (1.0 - geometry.rho + abs(geometry.v - geometry.lam)) * norm


def cerone_bound(f, outer, inner, p, tol=None):
    """Lp bound on the mean difference, in its published form.

    p = 1 uses the L1 branch. For p > 1 the first branch reads
    ((b-a)/(q+1)^(1/q)) [1 + (rho/(1-rho))^q]^(1/q) [v^(q+1) + lam^(q+1)]^(1/q) ||f'||_p.
    It dominates the exact kernel norm only when rho >= 1/2; see
    cerone_sharp_bound for the form valid for every subinterval.

    Raises:
        DomainError: inner not inside outer, p < 1, or rho = 1 with p > 1
    """
    _check_nested(outer, inner)
    geometry = SubintervalGeometry.from_intervals(outer, inner)
    if p == 1:
        return _l1_branch(f, outer, geometry, tol)
    if not p > 1:
        raise DomainError(f"cerone_bound requires p >= 1, got {p}")
    if geometry.rho >= 1.0:
        raise DomainError("cerone_bound first branch is undefined for rho = 1")
    q = conjugate(p)
    ratio = geometry.rho / (1.0 - geometry.rho)
    factor = (1.0 + ratio ** q) ** (1.0 / q)
    tails = (geometry.v ** (q + 1) + geometry.lam ** (q + 1)) ** (1.0 / q)
    constant = outer.length / (q + 1) ** (1.0 / q) * factor * tails
    return constant * derivative_norm(f, p, outer, tol)


def cerone_sharp_bound(f, outer, inner, p, tol=None):
    """Exact Lq norm of the mean-difference kernel times ||f'||_p.

    ((b-a)^(1/q)/(q+1)^(1/q)) [1 + rho/(1-rho)]^(1/q) [v^(q+1) + lam^(q+1)]^(1/q) ||f'||_p
    """
    _check_nested(outer, inner)
    if inner == outer:
        return 0.0
    geometry = SubintervalGeometry.from_intervals(outer, inner)
    if p == 1:
        return _l1_branch(f, outer, geometry, tol)
    if not p > 1:
        raise DomainError(f"cerone_sharp_bound requires p >= 1, got {p}")
    q = conjugate(p)
    factor = (1.0 / (1.0 - geometry.rho)) ** (1.0 / q)
    tails = (geometry.v ** (q + 1) + geometry.lam ** (q + 1)) ** (1.0 / q)
    constant = (outer.length / (q + 1)) ** (1.0 / q) * factor * tails
    return constant * derivative_norm(f, p, outer, tol)


def kernel_bound(g, outer, t, p, tol=None):
    """Bound on |mean_[a,t] g - mean_[a,b] g| for a < t < b.

    ((b-t)^(1/q) / ((q+1)^(1/q) (b-a)^(1/q))) [(t-a)^q + (b-t)^q]^(1/q) ||g'||_p
    """
    if not outer.a < t < outer.b:
        raise DomainError(f"kernel_bound requires t inside ({outer.a}, {outer.b}), got {t}")
    if not p > 1:
        raise DomainError(f"kernel_bound requires p > 1, got {p}")
    q = conjugate(p)
    left, right = t - outer.a, outer.b - t
    constant = ((right / outer.length) ** (1.0 / q) / (q + 1) ** (1.0 / q)
                * (left ** q + right ** q) ** (1.0 / q))
    return constant * derivative_norm(g, p, outer, tol)
