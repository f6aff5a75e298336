"""
Means built from the generalized arc functions.

Tilde means, for x = (a - b) / (a + b) and A = (a + b) / 2:

    L~_p = A x / arctanh_p(x)     P~_p = A x / arcsin_p(x)
    T~_p = A x / arctan_p(x)      M~_p = A x / arcsinh_p(x)

They are means for p >= 2 and collapse to L, P, T, M at p = 2.

Neuman's means come from the p-version of the Schwab-Borchardt mean,
SB_p(x, y) = y / F(1/p, 1/p; 1 + 1/p; 1 - (x/y)^p), and are evaluated as
A_{p/2} v_p / arc_p(v_p) with v_p = |a^{p/2} - b^{p/2}| / (a^{p/2} + b^{p/2}).
"""
import logging
import math
from typing import Callable, Union

from ptrig.functions import (
    PExponent, arccos_p, arccosh_p, arcsin_p, arcsin_p_quadrature, arcsinh_p, arcsinh_p_quadrature, arctan_p,
    arctan_p_quadrature, arctanh_p, arctanh_p_quadrature,
)
from quadrature.exceptions import DomainError
from special.hypergeometric import HypergeometricArgs, hyp2f1

from .bivariate import CLASSICAL_KINDS, MeanInput, MeanValue, agm, bhatia_li, classical, power_mean

logger = logging.getLogger(__name__)

TILDE_KINDS = ("L", "P", "T", "M")
NEUMAN_KINDS = ("L", "P", "T", "M")

ArcFunction = Callable[[PExponent, float], float]

_ARCS: dict[str, ArcFunction] = {
    "L": arctanh_p,
    "P": arcsin_p,
    "T": arctan_p,
    "M": arcsinh_p,
}

_ARC_ORACLES: dict[str, ArcFunction] = {
    "L": arctanh_p_quadrature,
    "P": arcsin_p_quadrature,
    "T": arctan_p_quadrature,
    "M": arcsinh_p_quadrature,
}

# positions in L <= L~_p < P~_p < A < M~_p < T~_p <= Q
CHAIN_POSITIONS = {
    "L": 1,
    "L~": 2,
    "P~": 3,
    "A": 4,
    "M~": 5,
    "T~": 6,
    "Q": 7,
}


def _check_kind(kind: str, allowed: tuple[str, ...], family: str):
    if kind not in allowed:
        raise DomainError(f"Unknown {family} kind '{kind}', expected one of {', '.join(allowed)}")


def schwab_borchardt(p: Union[PExponent, float], x: float, y: float) -> float:
    """
    SB_p(x, y) = y / F(1/p, 1/p; 1 + 1/p; 1 - (x/y)^p).

    For x > y the argument is negative and the evaluator transforms it.

    :param p: Order, p > 1.
    :param x: First argument, > 0.
    :param y: Second argument, > 0.
    """
    p = PExponent.of(p)
    if not (math.isfinite(x) and math.isfinite(y) and x > 0 and y > 0):
        raise DomainError(f"Schwab-Borchardt mean needs x, y > 0, got x={x}, y={y}")
    if x == y:
        return x
    r = p.reciprocal
    return y / hyp2f1(HypergeometricArgs(r, r, 1.0 + r, 1.0 - (x / y) ** p.p))


def schwab_borchardt_arccosh(p: Union[PExponent, float], x: float, y: float) -> float:
    """
    SB_p through the arc functions: (x^p - y^p)^(1/p) / arccosh_p(x/y) for x > y
    and (y^p - x^p)^(1/p) / arccos_p(x/y) for x < y.
    """
    p = PExponent.of(p)
    if not (math.isfinite(x) and math.isfinite(y) and x > 0 and y > 0):
        raise DomainError(f"Schwab-Borchardt mean needs x, y > 0, got x={x}, y={y}")
    if x == y:
        return x
    ratio = x / y
    if x > y:
        return (x ** p.p - y ** p.p) ** p.reciprocal / arccosh_p(p, ratio)
    return (y ** p.p - x ** p.p) ** p.reciprocal / arccos_p(p, ratio)


def neuman_mean(kind: str, p: Union[PExponent, float], pair: MeanInput) -> MeanValue:
    """
    Neuman's L_p, P_p, T_p or M_p: A_{p/2} v_p / arc_p(v_p).

    :param kind: One of L, P, T, M.
    :param p: Order; the mean property is guaranteed for p >= 2.
    :param pair: Ordered input pair.
    """
    _check_kind(kind, NEUMAN_KINDS, "Neuman mean")
    p = PExponent.of(p)
    family = f"{kind}_p"
    if pair.equal:
        return MeanValue(value=pair.a, family=family, p=p.p)

    half = 0.5 * p.p
    # v_p with a^{p/2} factored out
    ratio = (pair.b / pair.a) ** half
    v = (1.0 - ratio) / (1.0 + ratio)
    scale = power_mean(half, pair).value
    return MeanValue(value=scale * v / _ARCS[kind](p, v), family=family, p=p.p)


def tilde_mean(kind: str, p: Union[PExponent, float], pair: MeanInput) -> MeanValue:
    """
    A x / arc_p(x) for arc in arctanh_p (L), arcsin_p (P), arctan_p (T), arcsinh_p (M).

    :param kind: One of L, P, T, M.
    :param p: Order, p > 1; values for p < 2 are computed but are not guaranteed to be means.
    :param pair: Ordered input pair.
    """
    _check_kind(kind, TILDE_KINDS, "tilde mean")
    p = PExponent.of(p)
    if p.p < 2.0:
        logger.warning("%s~ evaluated at p=%g < 2, outside the range where it is a mean", kind, p.p)
    family = f"{kind}~"
    if pair.equal:
        return MeanValue(value=pair.a, family=family, p=p.p)
    x = pair.x
    return MeanValue(value=pair.A * x / _ARCS[kind](p, x), family=family, p=p.p)


def tilde_mean_quadrature(kind: str, p: Union[PExponent, float], pair: MeanInput) -> float:
    """Oracle for ``tilde_mean`` with the arc function integrated from its definition."""
    _check_kind(kind, TILDE_KINDS, "tilde mean")
    p = PExponent.of(p)
    if pair.equal:
        return pair.a
    x = pair.x
    return pair.A * x / _ARC_ORACLES[kind](p, x)


def all_means(p: Union[PExponent, float], pair: MeanInput) -> list[MeanValue]:
    """
    Every implemented mean of the pair at order p, sorted ascending by value.

    The Bhatia-Li mean uses the same p. Ties keep the order A, G, L, P, T, M, Q,
    AGM, BL, Neuman, tilde.
    """
    p = PExponent.of(p)
    rows = [classical(kind, pair) for kind in CLASSICAL_KINDS]
    rows.append(agm(pair))
    rows.append(bhatia_li(p.p, pair))
    rows.extend(neuman_mean(kind, p, pair) for kind in NEUMAN_KINDS)
    rows.extend(tilde_mean(kind, p, pair) for kind in TILDE_KINDS)
    return sorted(rows, key=lambda row: row.value)
