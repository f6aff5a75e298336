"""
Theorem and corollary clauses on the tilde means.

Every clause is evaluated in normalized coordinates: means are divided by
A = (a + b) / 2, which leaves functions of x = (a - b) / (a + b) alone.
Printed forms that carry a stray power of A are therefore read at A = 1.
"""
import logging
import math
from typing import Optional

from means.bivariate import MeanInput, classical
from means.generalized import neuman_mean, tilde_mean
from ptrig.constants import constants
from ptrig.functions import arcsin_p_complement_integral, j_p, pi_p
from special.functions import beta

from .claims import (
    AS_DERIVED, AS_PRINTED, COMMON, ORDERED_PAIR, ORDERED_PAIR_FROM_2, ClaimPoint, Domain, InequalityClaim, Sides,
)
from .reports import ClaimReport, evaluate, evaluate_all
from .turning_points import (
    derivative_ratio, monotone_sides, ratio, solve_ratio_crossing, solve_turning_point, solve_x0, u2,
)

logger = logging.getLogger(__name__)


def _tilde(kind: str, p: float, point: ClaimPoint) -> float:
    return tilde_mean(kind, p, point.pair).value / point.pair.A


def _classical(kind: str, point: ClaimPoint) -> float:
    return classical(kind, point.pair).value / point.pair.A


def _z(point: ClaimPoint) -> float:
    return point.x ** point.p


# chain L <= L~_p < P~_p < A < M~_p < T~_p <= Q

def _chain(lower: str, upper: str):
    def side(name: str, point: ClaimPoint) -> float:
        if name == "A":
            return 1.0
        if name in ("L", "Q"):
            return _classical(name, point)
        return _tilde(name[0], point.p, point)

    return lambda point: Sides(side(lower, point), side(upper, point))


CHAIN = (
    InequalityClaim("T1", "L<=L~", _chain("L", "L~"), strict=False),
    InequalityClaim("T1", "L~<P~", _chain("L~", "P~")),
    InequalityClaim("T1", "P~<A", _chain("P~", "A")),
    InequalityClaim("T1", "A<M~", _chain("A", "M~")),
    InequalityClaim("T1", "M~<T~", _chain("M~", "T~")),
    InequalityClaim("T1", "T~<=Q", _chain("T~", "Q"), strict=False),
)


# pointwise monotonicity of the quotients f1..f4

def _monotone(name: str, split=None):
    return lambda point: Sides(*monotone_sides(name, point.p, point.q, point.x, split))


RATIO_MONOTONICITY = (
    InequalityClaim("T2a", "f1", _monotone("f1"), domain=ORDERED_PAIR),
    InequalityClaim("T2a", "f2", _monotone("f2"), domain=ORDERED_PAIR),
    InequalityClaim("T2a", "f3", _monotone("f3"), domain=ORDERED_PAIR),
    InequalityClaim("T2a", "f4", _monotone("f4", solve_turning_point), variant=AS_DERIVED, domain=ORDERED_PAIR),
    InequalityClaim("T2a", "f4", _monotone("f4", solve_x0), variant=AS_PRINTED, domain=ORDERED_PAIR),
)


# the roots x0, x1, x2 as equations

_ROOTS = Domain(p_min=1.0, p_open=True, uses_q=True, uses_x=False)


def _x0_equation(point: ClaimPoint) -> Sides:
    x0 = solve_x0(point.p, point.q)
    return Sides(u2(point.p, point.q, x0), 0.0, x=x0)


def _x1_equation(point: ClaimPoint) -> Sides:
    x1 = solve_turning_point(point.p, point.q)
    return Sides(ratio("f4", point.p, point.q, x1), derivative_ratio("f4", point.p, point.q, x1), x=x1)


def _x2_equation(point: ClaimPoint) -> Sides:
    x2 = solve_ratio_crossing(point.p, point.q)
    return Sides(ratio("f4", point.p, point.q, x2), ratio("f4", point.p, point.q, 1.0), x=x2)


ROOTS = (
    InequalityClaim("T2b", "u2(x0)=0", _x0_equation, strict=False, domain=_ROOTS),
    InequalityClaim("T2b", "h4(x1)=f4(x1)", _x1_equation, strict=False, domain=_ROOTS),
    InequalityClaim("T2b", "f4(x2)=f4(1)", _x2_equation, strict=False, domain=_ROOTS),
)


# ratio bounds for 2 <= p < q

def _tilde_ratio(kind: str, point: ClaimPoint) -> float:
    return tilde_mean(kind, point.p, point.pair).value / tilde_mean(kind, point.q, point.pair).value


def _p_ratio_lower(point: ClaimPoint) -> Sides:
    return Sides(pi_p(point.q) / pi_p(point.p), _tilde_ratio("P", point))


def _p_ratio_upper(point: ClaimPoint) -> Sides:
    return Sides(_tilde_ratio("P", point), 1.0)


def _m_ratio_lower(point: ClaimPoint) -> Sides:
    return Sides(1.0, _tilde_ratio("M", point))


def _m_ratio_upper(point: ClaimPoint) -> Sides:
    return Sides(_tilde_ratio("M", point), constants(point.q).c_p / constants(point.p).c_p)


def _l_ratio_lower_printed(point: ClaimPoint) -> Sides:
    return Sides(1.0, _tilde_ratio("L", point))


def _l_ratio_upper_printed(point: ClaimPoint) -> Sides:
    return Sides(_tilde_ratio("L", point), point.q / point.p)


def _l_ratio_lower(point: ClaimPoint) -> Sides:
    return Sides(point.p / point.q, _tilde_ratio("L", point))


def _l_ratio_upper(point: ClaimPoint) -> Sides:
    return Sides(_tilde_ratio("L", point), 1.0)


def _t_ratio(split):
    def sides(point: ClaimPoint) -> Sides:
        value = _tilde_ratio("T", point)
        limit = constants(point.q).b_p / constants(point.p).b_p
        if point.x < split(point.p, point.q):
            return Sides(value, limit)
        return Sides(limit, value)

    return sides


RATIO_BOUNDS = (
    InequalityClaim("T2c", "P~-lower", _p_ratio_lower, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "P~-upper", _p_ratio_upper, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "M~-lower", _m_ratio_lower, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "M~-upper", _m_ratio_upper, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "L~-lower", _l_ratio_lower, variant=AS_DERIVED, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "L~-lower", _l_ratio_lower_printed, variant=AS_PRINTED, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "L~-upper", _l_ratio_upper, variant=AS_DERIVED, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "L~-upper", _l_ratio_upper_printed, variant=AS_PRINTED, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "T~", _t_ratio(solve_ratio_crossing), variant=AS_DERIVED, domain=ORDERED_PAIR_FROM_2),
    InequalityClaim("T2c", "T~", _t_ratio(solve_x0), variant=AS_PRINTED, domain=ORDERED_PAIR_FROM_2),
)


# products: P~_p M~_p <= P~_2p^2 <= k P~_p M~_p

def product_constant_printed(p: float, x: float) -> float:
    """k(x, p) = ((1 + x^p)^(2/p) + (1 - x^p)^(2/p))^2 / (4 (1 - x^2p)^(1/p))."""
    z = x ** p
    return ((1.0 + z) ** (2.0 / p) + (1.0 - z) ** (2.0 / p)) ** 2 / (4.0 * (1.0 - z * z) ** (1.0 / p))


def product_constant(p: float, x: float) -> float:
    """(u + w)^2 / (4 u w), u = (1 + x^p)^(1/2p), w = (1 - x^p)^(1/2p)."""
    z = x ** p
    u = (1.0 + z) ** (0.5 / p)
    w = (1.0 - z) ** (0.5 / p)
    return (u + w) ** 2 / (4.0 * u * w)


def _product_left(point: ClaimPoint) -> Sides:
    p = point.p
    return Sides(_tilde("P", p, point) * _tilde("M", p, point), _tilde("P", 2.0 * p, point) ** 2)


def _product_right(constant):
    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        k = constant(p, point.x)
        return Sides(_tilde("P", 2.0 * p, point) ** 2, k * _tilde("P", p, point) * _tilde("M", p, point))

    return sides


PRODUCT_BOUNDS = (
    InequalityClaim("T3", "left", _product_left, strict=False),
    InequalityClaim("T3", "right", _product_right(product_constant), variant=AS_DERIVED, strict=False),
    InequalityClaim("T3", "right", _product_right(product_constant_printed), variant=AS_PRINTED, strict=False),
)


# sums: 1/P~_p + r/M~_p <= (r + 1)/P~_2p and P~_2p^2p (P~_p^-p + M~_p^-p) <= R

def sum_weight(p: float, x: float) -> float:
    """r = ((1 + x^p) / (1 - x^p))^(1/2p), the upper bound of the square-root quotient."""
    z = x ** p
    return ((1.0 + z) / (1.0 - z)) ** (0.5 / p)


def sum_weight_printed(p: float, x: float) -> float:
    z = x ** p
    return (1.0 + z) * (1.0 - z) ** (-0.5 / p)


def power_sum_bound(p: float, x: float) -> float:
    """R = 2 K^p, K = (s + 1/s + 2) / 4, s = (1 - x^2p)^(1/2p)."""
    s = (1.0 - x ** (2.0 * p)) ** (0.5 / p)
    return 2.0 * (0.25 * (s + 1.0 / s + 2.0)) ** p


def power_sum_bound_printed(p: float, x: float) -> float:
    s = (1.0 - x ** (2.0 * p)) ** (0.5 / p)
    return (s + 1.0 / s) ** (0.5 / p) / 2.0 ** (2.0 * p - 1.0)


def _weighted_sum(weight):
    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        r = weight(p, point.x)
        lhs = 1.0 / _tilde("P", p, point) + r / _tilde("M", p, point)
        return Sides(lhs, (r + 1.0) / _tilde("P", 2.0 * p, point))

    return sides


def _power_sum(bound):
    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        lhs = _tilde("P", 2.0 * p, point) ** (2.0 * p) * (_tilde("P", p, point) ** -p + _tilde("M", p, point) ** -p)
        return Sides(lhs, bound(p, point.x))

    return sides


SUM_BOUNDS = (
    InequalityClaim("T4", "weighted", _weighted_sum(sum_weight), variant=AS_DERIVED, strict=False),
    InequalityClaim("T4", "weighted", _weighted_sum(sum_weight_printed), variant=AS_PRINTED, strict=False),
    InequalityClaim("T4", "power", _power_sum(power_sum_bound), variant=AS_DERIVED, strict=False),
    InequalityClaim("T4", "power", _power_sum(power_sum_bound_printed), variant=AS_PRINTED, strict=False),
)


# A L~_2p >= T~_p L~_p and its Gruss companion

def _chebyshev(point: ClaimPoint) -> Sides:
    p = point.p
    return Sides(_tilde("T", p, point) * _tilde("L", p, point), _tilde("L", 2.0 * p, point))


def _gruss(point: ClaimPoint) -> Sides:
    p = point.p
    lhs = 1.0 / (_tilde("T", p, point) * _tilde("L", p, point)) - 1.0 / _tilde("L", 2.0 * p, point)
    z2 = point.x ** (2.0 * p)
    return Sides(lhs, z2 / (4.0 * (1.0 - z2)))


CHEBYSHEV_GRUSS = (
    InequalityClaim("T5", "chebyshev", _chebyshev, strict=False),
    InequalityClaim("T5", "gruss", _gruss, strict=False),
)


# single bounds on T~_p / A and L~_p / A

def _t_single_lower(point: ClaimPoint) -> Sides:
    p, z = point.p, _z(point)
    return Sides(4.0 * (1.0 + z) * (1.0 + z / (p + 1.0)) / (z + 2.0) ** 2, _tilde("T", p, point))


def _t_single_upper(point: ClaimPoint) -> Sides:
    p, z = point.p, _z(point)
    return Sides(_tilde("T", p, point), 1.0 + z / (1.0 + p))


def _l_single_lower(point: ClaimPoint) -> Sides:
    p, z = point.p, _z(point)
    return Sides(4.0 * (1.0 - z) * (1.0 - z / (1.0 + p)) / (2.0 - z) ** 2, _tilde("L", p, point))


def _l_single_upper(point: ClaimPoint) -> Sides:
    p, z = point.p, _z(point)
    return Sides(_tilde("L", p, point), 1.0 - z / (1.0 + p))


SINGLE_BOUNDS_TL = (
    InequalityClaim("T6", "T~-lower", _t_single_lower, strict=False),
    InequalityClaim("T6", "T~-upper", _t_single_upper, strict=False),
    InequalityClaim("T6", "L~-lower", _l_single_lower, strict=False),
    InequalityClaim("T6", "L~-upper", _l_single_upper, strict=False),
)


# single bounds on A / P~_p and A / M~_p

def _a_over(kind: str, point: ClaimPoint) -> float:
    return 1.0 / _tilde(kind, point.p, point)


def _p_inverse_lower(point: ClaimPoint) -> Sides:
    x = point.x
    return Sides(x / arcsin_p_complement_integral(point.p, x), _a_over("P", point))


def _p_inverse_lower_printed(point: ClaimPoint) -> Sides:
    r = 1.0 / point.p
    return Sides(point.p * point.x / beta(r, 1.0 + r), _a_over("P", point))


def _p_inverse_upper(point: ClaimPoint) -> Sides:
    p, x = point.p, point.x
    alpha = (1.0 - x ** p) ** (1.0 / p)
    bound = x * (1.0 + alpha) ** 2 / (4.0 * alpha * arcsin_p_complement_integral(p, x))
    return Sides(_a_over("P", point), bound)


def _p_inverse_upper_printed(point: ClaimPoint) -> Sides:
    # the two beta factors of the printed form cancel
    p, x, z = point.p, point.x, _z(point)
    return Sides(_a_over("P", point), p * x * (2.0 - z) ** 2 / (4.0 * (1.0 - z)))


def _m_inverse_lower(point: ClaimPoint) -> Sides:
    return Sides(point.x / j_p(point.p, point.x), _a_over("M", point))


def _m_inverse_upper(squared: bool):
    def sides(point: ClaimPoint) -> Sides:
        p, x = point.p, point.x
        b = (1.0 + x ** p) ** (1.0 / p)
        bound = x * (1.0 + b) ** (2 if squared else 1) / (4.0 * b * j_p(p, x))
        return Sides(_a_over("M", point), bound)

    return sides


SINGLE_BOUNDS_PM = (
    InequalityClaim("T7", "A/P~-lower", _p_inverse_lower, variant=AS_DERIVED, strict=False),
    InequalityClaim("T7", "A/P~-lower", _p_inverse_lower_printed, variant=AS_PRINTED, strict=False),
    InequalityClaim("T7", "A/P~-upper", _p_inverse_upper, variant=AS_DERIVED, strict=False),
    InequalityClaim("T7", "A/P~-upper", _p_inverse_upper_printed, variant=AS_PRINTED, strict=False),
    InequalityClaim("T7", "A/M~-lower", _m_inverse_lower, strict=False),
    InequalityClaim("T7", "A/M~-upper", _m_inverse_upper(squared=True), variant=AS_DERIVED, strict=False),
    InequalityClaim("T7", "A/M~-upper", _m_inverse_upper(squared=False), variant=AS_PRINTED, strict=False),
)


# ratio bounds through the constants a_p, b_p, c_p

def _a_p(printed: bool):
    return lambda p: 0.5 * math.pi if printed else 0.5 * pi_p(p)


def _scaled_lower(small: str, large: str, factor):
    """factor(p) large <= small."""

    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        return Sides(factor(p) * _tilde(large, p, point), _tilde(small, p, point))

    return sides


def _below(small: str, large: str):
    return lambda point: Sides(_tilde(small, point.p, point), _tilde(large, point.p, point))


def _b_over_c(p: float) -> float:
    c = constants(p)
    return c.b_p / c.c_p


def _c_over_a(printed: bool):
    a_p = _a_p(printed)
    return lambda p: constants(p).c_p / a_p(p)


def _b_over_a(printed: bool):
    a_p = _a_p(printed)
    return lambda p: constants(p).b_p / a_p(p)


CONSTANT_RATIO_BOUNDS = (
    InequalityClaim("T8", "M~/T~-lower", _scaled_lower("M", "T", _b_over_c)),
    InequalityClaim("T8", "M~/T~-upper", _below("M", "T")),
    InequalityClaim("T8", "P~/M~-lower", _scaled_lower("P", "M", _c_over_a(False)), variant=AS_DERIVED),
    InequalityClaim("T8", "P~/M~-lower", _scaled_lower("P", "M", _c_over_a(True)), variant=AS_PRINTED),
    InequalityClaim("T8", "P~/M~-upper", _below("P", "M")),
    InequalityClaim("T8", "P~/T~-lower", _scaled_lower("P", "T", _b_over_a(False)), variant=AS_DERIVED),
    InequalityClaim("T8", "P~/T~-lower", _scaled_lower("P", "T", _b_over_a(True)), variant=AS_PRINTED),
    InequalityClaim("T8", "P~/T~-upper", _below("P", "T")),
)


# logarithmic sandwiches

def _log_sandwich_l(weight, lower: bool):
    def sides(point: ClaimPoint) -> Sides:
        bound = 1.0 / (1.0 - weight(point.p) * math.log1p(-_z(point)))
        value = _tilde("L", point.p, point)
        return Sides(bound, value) if lower else Sides(value, bound)

    return sides


def _log_sandwich_m(weight, lower: bool, printed: bool):
    def sides(point: ClaimPoint) -> Sides:
        p, z = point.p, _z(point)
        u = (1.0 + z) ** (-1.0 / p)
        factor = u if printed else 1.0 / u
        bound = factor / (1.0 + weight(p) * math.log1p(z))
        value = _tilde("M", p, point)
        return Sides(bound, value) if lower else Sides(value, bound)

    return sides


def _alpha(p: float) -> float:
    return 1.0 / p


def _beta(p: float) -> float:
    return 1.0 / (1.0 + p)


def _tilde_l_vs_p(point: ClaimPoint) -> Sides:
    p = point.p
    return Sides((1.0 - _z(point)) ** (1.0 / p) * _tilde("P", p, point), _tilde("L", p, point))


def _tilde_l_below_p(point: ClaimPoint) -> Sides:
    # P~_p / A^(p-1) at A = 1
    return Sides(_tilde("L", point.p, point), _tilde("P", point.p, point))


def _turan(kind: str, convex: bool):
    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        square = _tilde(kind, p, point) ** 2
        product = _tilde(kind, p - 1.0, point) * _tilde(kind, p + 1.0, point)
        return Sides(product, square) if convex else Sides(square, product)

    return sides


def _geometric(point: ClaimPoint) -> Sides:
    p, q = point.p, point.q
    return Sides(math.sqrt(_tilde("P", p, point) * _tilde("P", q, point)), _tilde("P", math.sqrt(p * q), point))


def _special(kind: str, clause: int):
    """
    P < P~_3^2 / P~_4 < P~_3^2 / L~_4, L < L~_3^2 / L~_4 < L~_3^2 / L, T > T~_3^2 / T~_4 > T~_3^2 / T.
    """

    def sides(point: ClaimPoint) -> Sides:
        base = _tilde(kind, 3.0, point) ** 2
        middle = base / _tilde(kind, 4.0, point)
        outer = _classical(kind, point)
        if clause == 1:
            return Sides(middle, outer) if kind == "T" else Sides(outer, middle)
        if kind == "P":
            return Sides(middle, base / _tilde("L", 4.0, point))
        if kind == "L":
            return Sides(middle, base / outer)
        return Sides(base / outer, middle)

    return sides


def _neuman_p(order: float, point: ClaimPoint) -> float:
    return neuman_mean("P", order, point.pair).value / point.pair.A


def _pi_lower(point: ClaimPoint) -> Sides:
    return Sides(2.0 / pi_p(point.p), _tilde("P", point.p, point))


def _pi_middle(printed: bool):
    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        middle = _neuman_p(2.0 * p, point) if printed else _tilde("P", 2.0 * p, point)
        return Sides(_tilde("P", p, point), middle)

    return sides


def _pi_upper(printed: bool):
    def sides(point: ClaimPoint) -> Sides:
        p = point.p
        middle = _neuman_p(2.0 * p, point) if printed else _tilde("P", 2.0 * p, point)
        return Sides(middle, 1.0)

    return sides


_TURAN = Domain(p_min=3.0)
_GEOMETRIC = Domain(uses_q=True, q_above_p=False)
_FIXED_ORDERS = Domain(uses_p=False)

COROLLARIES = (
    InequalityClaim("C1", "L~-lower", _log_sandwich_l(_alpha, lower=True)),
    InequalityClaim("C1", "L~-upper", _log_sandwich_l(_beta, lower=False)),
    InequalityClaim("C1", "M~-lower", _log_sandwich_m(_alpha, lower=True, printed=False), variant=AS_DERIVED),
    InequalityClaim("C1", "M~-lower", _log_sandwich_m(_alpha, lower=True, printed=True), variant=AS_PRINTED),
    InequalityClaim("C1", "M~-upper", _log_sandwich_m(_beta, lower=False, printed=False), variant=AS_DERIVED),
    InequalityClaim("C1", "M~-upper", _log_sandwich_m(_beta, lower=False, printed=True), variant=AS_PRINTED),
    InequalityClaim("C2", "lower", _tilde_l_vs_p),
    InequalityClaim("C2", "upper", _tilde_l_below_p),
    InequalityClaim("C3", "P~", _turan("P", convex=True), domain=_TURAN),
    InequalityClaim("C3", "L~", _turan("L", convex=True), domain=_TURAN),
    InequalityClaim("C3", "T~", _turan("T", convex=False), domain=_TURAN),
    InequalityClaim("C4", "geometric", _geometric, strict=False, domain=_GEOMETRIC),
    InequalityClaim("C5", "P-1", _special("P", 1), domain=_FIXED_ORDERS),
    InequalityClaim("C5", "P-2", _special("P", 2), domain=_FIXED_ORDERS),
    InequalityClaim("C5", "L-1", _special("L", 1), domain=_FIXED_ORDERS),
    InequalityClaim("C5", "L-2", _special("L", 2), domain=_FIXED_ORDERS),
    InequalityClaim("C5", "T-1", _special("T", 1), domain=_FIXED_ORDERS),
    InequalityClaim("C5", "T-2", _special("T", 2), domain=_FIXED_ORDERS),
    InequalityClaim("C6", "lower", _pi_lower),
    InequalityClaim("C6", "middle", _pi_middle(printed=False), variant=AS_DERIVED),
    InequalityClaim("C6", "middle", _pi_middle(printed=True), variant=AS_PRINTED),
    InequalityClaim("C6", "upper", _pi_upper(printed=False), variant=AS_DERIVED),
    InequalityClaim("C6", "upper", _pi_upper(printed=True), variant=AS_PRINTED),
)

THEOREM_CLAIMS = (
    *CHAIN, *RATIO_MONOTONICITY, *ROOTS, *RATIO_BOUNDS, *PRODUCT_BOUNDS, *SUM_BOUNDS, *CHEBYSHEV_GRUSS,
    *SINGLE_BOUNDS_TL, *SINGLE_BOUNDS_PM, *CONSTANT_RATIO_BOUNDS, *COROLLARIES,
)


def _point(p: Optional[float], pair: MeanInput, q: Optional[float] = None) -> ClaimPoint:
    return ClaimPoint(p=p, q=q, pair=pair)


def check_chain(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    """The six links of L <= L~_p < P~_p < A < M~_p < T~_p <= Q."""
    return evaluate_all(CHAIN, _point(p, pair), tol)


def check_ratio_monotonicity(name: str, p: float, q: float, xs, tol: Optional[float] = None,
                             printed: bool = False) -> list[ClaimReport]:
    """
    Discrete monotonicity of f = arc_p / arc_q on consecutive grid values.

    Each report compares f at neighbouring points, oriented by the direction
    f should have there. For f4 the cell holding the turning point is skipped;
    ``printed`` turns at x0 instead of x1.
    """
    claim = next(c for c in RATIO_MONOTONICITY
                 if c.clause == name and c.variant in (COMMON, AS_PRINTED if printed else AS_DERIVED))
    split = solve_x0 if printed else solve_turning_point
    xs = sorted(xs)
    reports = []
    for left, right in zip(xs, xs[1:]):
        if name == "f4":
            turn = split(p, q)
            if left < turn < right:
                continue
        point = ClaimPoint.normalized(left, p=p, q=q)
        increasing = name in ("f1", "f3") or (name == "f4" and left >= split(p, q))
        f_left, f_right = ratio(name, p, q, left), ratio(name, p, q, right)

        def step(_, lo=f_left, hi=f_right, up=increasing):
            return Sides(lo, hi) if up else Sides(hi, lo)

        reports.append(evaluate(InequalityClaim(claim.id, f"{name}-step", step, variant=claim.variant,
                                                domain=claim.domain), point, tol))
    return reports


def check_ratio_bounds(p: float, q: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(RATIO_BOUNDS, _point(p, pair, q), tol)


def check_product_bounds(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(PRODUCT_BOUNDS, _point(p, pair), tol)


def check_sum_bounds(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(SUM_BOUNDS, _point(p, pair), tol)


def check_chebyshev_gruss(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(CHEBYSHEV_GRUSS, _point(p, pair), tol)


def check_single_bounds_tl(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(SINGLE_BOUNDS_TL, _point(p, pair), tol)


def check_single_bounds_pm(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(SINGLE_BOUNDS_PM, _point(p, pair), tol)


def check_constant_ratio_bounds(p: float, pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(CONSTANT_RATIO_BOUNDS, _point(p, pair), tol)


def check_corollaries(p: float, q: Optional[float], pair: MeanInput, tol: Optional[float] = None) -> list[ClaimReport]:
    """C1..C6; clauses whose domain excludes (p, q) are left out."""
    return evaluate_all(COROLLARIES, _point(p, pair, q), tol)
