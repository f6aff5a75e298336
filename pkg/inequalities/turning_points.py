"""
Quotients of arc functions of two orders p < q and the points where they turn.

    f1 = arcsin_p / arcsin_q       f2 = arcsinh_p / arcsinh_q
    f3 = arctanh_p / arctanh_q     f4 = arctan_p / arctan_q

Each f is compared with h = f' / g', the quotient of the integrands. Since
f' = (g' / g)(h - f), f increases exactly where h > f.

For f4, h4 = (1 + x^q) / (1 + x^p) turns at x0, the root of
u2(x) = q x^(q-p) + (q-p) x^q - p. The quotient f4 itself keeps falling
until h4 catches up with it at x1 > x0, and returns to its value at 1 at
the crossing x2 in (0, x1).
"""
import logging
import math
from functools import lru_cache
from typing import Callable, Optional

from ptrig.functions import PExponent, arcsin_p, arcsinh_p, arctan_p, arctanh_p
from quadrature.exceptions import DomainError, NonConvergence
from quadrature.roots import ROOT_TOL, RootBracket, find_root

logger = logging.getLogger(__name__)

INCREASING = "increasing"
DECREASING = "decreasing"

# distance of the left end of the crossing bracket from 0, relative to x0
_CROSSING_START = 1e-3


def _arcsin_kernel(p: float, x: float) -> float:
    return (1.0 - x ** p) ** (-1.0 / p)


def _arcsinh_kernel(p: float, x: float) -> float:
    return (1.0 + x ** p) ** (-1.0 / p)


def _arctanh_kernel(p: float, x: float) -> float:
    return 1.0 / (1.0 - x ** p)


def _arctan_kernel(p: float, x: float) -> float:
    return 1.0 / (1.0 + x ** p)


RATIOS: dict[str, tuple[Callable, Callable]] = {
    "f1": (arcsin_p, _arcsin_kernel),
    "f2": (arcsinh_p, _arcsinh_kernel),
    "f3": (arctanh_p, _arctanh_kernel),
    "f4": (arctan_p, _arctan_kernel),
}

MONOTONICITY = {
    "f1": INCREASING,
    "f2": DECREASING,
    "f3": INCREASING,
}


def _orders(p: float, q: float) -> tuple[float, float]:
    p, q = PExponent.of(p).p, PExponent.of(q).p
    if not p < q:
        raise DomainError(f"Needs orders 1 < p < q, got p={p}, q={q}")
    return p, q


def _known_ratio(name: str):
    if name not in RATIOS:
        raise DomainError(f"Unknown quotient '{name}', expected one of {', '.join(RATIOS)}")
    return RATIOS[name]


def ratio(name: str, p: float, q: float, x: float) -> float:
    """f(x) = arc_p(x) / arc_q(x)."""
    arc, _ = _known_ratio(name)
    p, q = _orders(p, q)
    return arc(p, x) / arc(q, x)


def derivative_ratio(name: str, p: float, q: float, x: float) -> float:
    """h(x) = arc_p'(x) / arc_q'(x), the quotient of the integrands."""
    _, kernel = _known_ratio(name)
    p, q = _orders(p, q)
    if not 0.0 <= x < 1.0:
        raise DomainError(f"Quotient of integrands needs x in [0, 1), got {x}")
    return kernel(p, x) / kernel(q, x)


def u2(p: float, q: float, x: float) -> float:
    return q * x ** (q - p) + (q - p) * x ** q - p


def _solve(f: Callable[[float], float], lo: float, hi: float, what: str) -> float:
    try:
        return find_root(f, RootBracket.around(f, lo, hi), tol=ROOT_TOL)
    except NonConvergence as e:
        logger.warning("%s: residual %.2e above tolerance, keeping best iterate", what, e.error)
        return e.best


@lru_cache(maxsize=256)
def solve_x0(p: float, q: float) -> float:
    """
    The unique root of u2 in (0, 1); u2(0) = -p < 0 < u2(1) = 2(q - p).

    :raises NoSignChange: never for 1 < p < q.
    """
    p, q = _orders(p, q)
    x0 = _solve(lambda x: u2(p, q, x), 0.0, 1.0, f"x0({p:g}, {q:g})")
    logger.debug("x0(%g, %g) = %.15g", p, q, x0)
    return x0


@lru_cache(maxsize=256)
def solve_turning_point(p: float, q: float) -> float:
    """x1 in (x0, 1): the minimum of f4, where h4 = f4."""
    p, q = _orders(p, q)

    def gap(x: float) -> float:
        if x == 1.0:
            return 1.0 - ratio("f4", p, q, 1.0)
        return derivative_ratio("f4", p, q, x) - ratio("f4", p, q, x)

    return _solve(gap, solve_x0(p, q), 1.0, f"x1({p:g}, {q:g})")


@lru_cache(maxsize=256)
def solve_ratio_crossing(p: float, q: float) -> float:
    """x2 in (0, x1): where f4 falls back to f4(1) = b_p / b_q."""
    p, q = _orders(p, q)
    at_one = ratio("f4", p, q, 1.0)

    def excess(x: float) -> float:
        return ratio("f4", p, q, x) - at_one

    return _solve(excess, _CROSSING_START * solve_x0(p, q), solve_turning_point(p, q), f"x2({p:g}, {q:g})")


def direction(name: str, p: float, q: float, x: float, split: Optional[Callable[[float, float], float]] = None) -> str:
    """
    The direction of f at x. For f4 ``split`` gives the point where it turns.
    """
    if name in MONOTONICITY:
        return MONOTONICITY[name]
    split = split or solve_turning_point
    return DECREASING if x < split(p, q) else INCREASING


def monotone_sides(name: str, p: float, q: float, x: float, split=None) -> tuple[float, float]:
    """
    (lhs, rhs) of the pointwise derivative-sign form: f < h where f increases, h < f where it decreases.
    """
    f = ratio(name, p, q, x)
    h = derivative_ratio(name, p, q, x)
    if direction(name, p, q, x, split) == INCREASING:
        return f, h
    return h, f


def u2_residual(p: float, q: float) -> float:
    x0 = solve_x0(p, q)
    return abs(u2(*_orders(p, q), x0))


def closed_form_x0(p: float, q: float) -> float:
    """Valid when q = 2p: u2 is quadratic in x^p with root x^p = sqrt(2) - 1."""
    p, q = _orders(p, q)
    if not math.isclose(q, 2.0 * p, rel_tol=0.0, abs_tol=1e-15):
        raise DomainError(f"Closed form needs q = 2p, got p={p}, q={q}")
    return (math.sqrt(2.0) - 1.0) ** (1.0 / p)
