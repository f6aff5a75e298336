"""
The classical integral inequalities on [0, x], instantiated with the integrands
the mean inequalities are built from and evaluated by quadrature.

    L1 Cauchy-Bunyakovsky     L2 Polya-Szego and Schweizer    L3 Chebyshev
    L4 Gruss                  L5 reverse Minkowski            L6 Diaz-Metcalf
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from ptrig.functions import (
    arcsin_p_quadrature, arcsinh_p_quadrature, arctan_p_quadrature, arctanh_p_quadrature,
)
from quadrature.integrals import Integrand, integrate

from .checks import product_constant, product_constant_printed, sum_weight, sum_weight_printed
from .claims import AS_DERIVED, AS_PRINTED, ClaimPoint, InequalityClaim, Sides
from .reports import ClaimReport, evaluate_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ArcIntegrals:
    """
    Integrals over [0, x] at order p.

    :param s: int (1 - t^p)^(-1/p), arcsin_p.
    :param s2: int (1 - t^2p)^(-1/2p), arcsin_2p.
    :param h: int (1 + t^p)^(-1/p), arcsinh_p.
    :param t: int (1 + t^p)^(-1), arctan_p.
    :param k: int (1 - t^p)^(-1), arctanh_p.
    :param k2: int (1 - t^2p)^(-1), arctanh_2p.
    :param w: int (1 - t^2p)^(-1/p), the square of the arcsin_2p integrand.
    """
    p: float
    x: float
    s: float
    s2: float
    h: float
    t: float
    k: float
    k2: float
    w: float


@lru_cache(maxsize=1024)
def arc_integrals(p: float, x: float) -> ArcIntegrals:
    q = 2.0 * p
    w = integrate(Integrand(lambda t: (1.0 - t ** q) ** (-1.0 / p)), 0.0, x).value
    return ArcIntegrals(
        p=p,
        x=x,
        s=arcsin_p_quadrature(p, x),
        s2=arcsin_p_quadrature(q, x),
        h=arcsinh_p_quadrature(p, x),
        t=arctan_p_quadrature(p, x),
        k=arctanh_p_quadrature(p, x),
        k2=arctanh_p_quadrature(q, x),
        w=w,
    )


def _integrals(point: ClaimPoint) -> ArcIntegrals:
    return arc_integrals(point.p, point.x)


def _cauchy(point: ClaimPoint) -> Sides:
    """arcsin_2p^2 <= arcsin_p arcsinh_p."""
    i = _integrals(point)
    return Sides(i.s2 ** 2, i.s * i.h)


def _cauchy_reciprocal(point: ClaimPoint) -> Sides:
    """int F int 1/F >= x^2 for F = 1 + t^p."""
    i = _integrals(point)
    x, p = point.x, point.p
    return Sides(x * x, x * (1.0 + x ** p / (p + 1.0)) * i.t)


def _polya_szego(constant):
    def sides(point: ClaimPoint) -> Sides:
        i = _integrals(point)
        return Sides(i.s * i.h, constant(point.p, point.x) * i.s2 ** 2)

    return sides


def _schweizer(printed: bool):
    """int F int 1/F against x^2 (1 + A)^2 / 4A for F = 1 + t^p, A = 1 + x^p."""

    def sides(point: ClaimPoint) -> Sides:
        i = _integrals(point)
        x, p = point.x, point.p
        z = x ** p
        product = x * (1.0 + z / (p + 1.0)) * i.t
        bound = x * x * (2.0 + z) ** 2 / (4.0 * (1.0 + z))
        return Sides(bound, product) if printed else Sides(product, bound)

    return sides


def _chebyshev(printed: bool):
    """Opposite monotonicity of (1 + t^p)^-1 and (1 - t^p)^-1: arctan_p arctanh_p >= x arctanh_2p."""

    def sides(point: ClaimPoint) -> Sides:
        i = _integrals(point)
        if printed:
            return Sides(i.t * i.k, point.x * i.k2)
        return Sides(point.x * i.k2, i.t * i.k)

    return sides


def _gruss(point: ClaimPoint) -> Sides:
    i = _integrals(point)
    x = point.x
    z2 = x ** (2.0 * point.p)
    return Sides(abs(x * i.k2 - i.t * i.k), x * x * z2 / (4.0 * (1.0 - z2)))


def _minkowski(point: ClaimPoint) -> Sides:
    """arcsin_p^p + arcsinh_p^p <= 2 (int (1 - t^2p)^(-1/p))^p."""
    i = _integrals(point)
    p = point.p
    return Sides(i.s ** p + i.h ** p, 2.0 * i.w ** p)


def _diaz_metcalf(weight):
    def sides(point: ClaimPoint) -> Sides:
        i = _integrals(point)
        m = weight(point.p, point.x)
        return Sides(i.s + m * i.h, (m + 1.0) * i.s2)

    return sides


LEMMA_CLAIMS = (
    InequalityClaim("L1", "product", _cauchy, strict=False),
    InequalityClaim("L1", "reciprocal", _cauchy_reciprocal, strict=False),
    InequalityClaim("L2", "product", _polya_szego(product_constant), variant=AS_DERIVED, strict=False),
    InequalityClaim("L2", "product", _polya_szego(product_constant_printed), variant=AS_PRINTED, strict=False),
    InequalityClaim("L2", "schweizer", _schweizer(printed=False), variant=AS_DERIVED, strict=False),
    InequalityClaim("L2", "schweizer", _schweizer(printed=True), variant=AS_PRINTED, strict=False),
    InequalityClaim("L3", "chebyshev", _chebyshev(printed=False), variant=AS_DERIVED, strict=False),
    InequalityClaim("L3", "chebyshev", _chebyshev(printed=True), variant=AS_PRINTED, strict=False),
    InequalityClaim("L4", "gruss", _gruss, strict=False),
    InequalityClaim("L5", "minkowski", _minkowski, strict=False),
    InequalityClaim("L6", "diaz-metcalf", _diaz_metcalf(sum_weight), variant=AS_DERIVED, strict=False),
    InequalityClaim("L6", "diaz-metcalf", _diaz_metcalf(sum_weight_printed), variant=AS_PRINTED, strict=False),
)


def check_integral_lemmas(p: float, x: float, tol: Optional[float] = None) -> list[ClaimReport]:
    return evaluate_all(LEMMA_CLAIMS, ClaimPoint.normalized(x, p=p), tol)
