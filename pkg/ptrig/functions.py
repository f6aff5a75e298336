"""
Generalized inverse trigonometric and hyperbolic functions of order p.

    arcsin_p(x)  = int_0^x (1 - t^p)^(-1/p) dt      0 <= x <= 1
    arctan_p(x)  = int_0^x (1 + t^p)^(-1)   dt      x >= 0
    arcsinh_p(x) = int_0^x (1 + t^p)^(-1/p) dt      x >= 0
    arctanh_p(x) = int_0^x (1 - t^p)^(-1)   dt      0 <= x < 1

Each is returned from its Gauss hypergeometric closed form; the matching
``*_quadrature`` function integrates the definition and serves as oracle.
All reduce to the classical functions at p = 2.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Union

from quadrature.exceptions import DomainError, NonConvergence
from quadrature.integrals import Integrand, integrate
from quadrature.roots import RootBracket, find_root
from special.functions import beta, beta_incomplete
from special.hypergeometric import HypergeometricArgs, hyp2f1

logger = logging.getLogger(__name__)

SIN_P_TOL = 1e-12
# Within this distance of x = 1 the quadrature oracles treat the integrand as
# singular at 1 instead of integrating a near-singular kernel directly.
NEAR_ONE = 1e-3
# arctanh_p oracle: below this 1 - t its regular part is replaced by two Taylor terms.
REGULAR_PART_SERIES = 1e-5


@dataclass(frozen=True)
class PExponent:
    """
    The order p of the generalized functions; p > 1.
    """
    p: float

    def __post_init__(self):
        if not (math.isfinite(self.p) and self.p > 1.0):
            raise DomainError(f"p must be a finite number greater than 1, got {self.p}")

    @property
    def reciprocal(self) -> float:
        return 1.0 / self.p

    @classmethod
    def of(cls, p: Union['PExponent', float]) -> 'PExponent':
        return p if isinstance(p, cls) else cls(float(p))


def pi_p(p: Union[PExponent, float]) -> float:
    """Generalized pi, 2 arcsin_p(1) = 2 pi / (p sin(pi / p))."""
    p = PExponent.of(p).p
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


def _check_unit(name: str, x: float, include_one: bool):
    upper_ok = x <= 1.0 if include_one else x < 1.0
    if not (math.isfinite(x) and 0.0 <= x and upper_ok):
        interval = "[0, 1]" if include_one else "[0, 1)"
        raise DomainError(f"{name} needs x in {interval}, got {x}")


def _check_nonnegative(name: str, x: float):
    if not (math.isfinite(x) and x >= 0.0):
        raise DomainError(f"{name} needs a finite x >= 0, got {x}")


def _unit_power(x: float, p: float) -> tuple[float, float]:
    """x^p and 1 - x^p for x in (0, 1), the second without cancellation near x = 1."""
    return x ** p, -math.expm1(p * math.log(x))


def _arc_kernels(x: float, p: float) -> tuple[float, float]:
    """x (1 + x^p)^(-1/p) and x^p / (1 + x^p), formed without overflow for large x."""
    if x <= 1.0:
        xp = x ** p
        return x * (1.0 + xp) ** (-1.0 / p), xp / (1.0 + xp)
    inverse = x ** -p
    return (1.0 + inverse) ** (-1.0 / p), 1.0 / (1.0 + inverse)


def arcsin_p(p: Union[PExponent, float], x: float) -> float:
    """
    :param p: Order, p > 1.
    :param x: Argument in [0, 1]; x = 1 gives pi_p / 2 from the closed form.
    :return: x F(1/p, 1/p; 1 + 1/p; x^p).
    """
    p = PExponent.of(p)
    _check_unit("arcsin_p", x, include_one=True)
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 0.5 * pi_p(p)
    r = p.reciprocal
    z, w = _unit_power(x, p.p)
    return x * hyp2f1(HypergeometricArgs(r, r, 1.0 + r, z, one_minus_z=w))


def arccos_p(p: Union[PExponent, float], x: float) -> float:
    """arcsin_p((1 - x^p)^(1/p)) for x in [0, 1]."""
    p = PExponent.of(p)
    _check_unit("arccos_p", x, include_one=True)
    return arcsin_p(p, (1.0 - x ** p.p) ** p.reciprocal)


def arctan_p(p: Union[PExponent, float], x: float) -> float:
    """
    x (1 + x^p)^(-1/p) F(1/p, 1/p; 1 + 1/p; x^p / (1 + x^p)) for x >= 0.
    """
    p = PExponent.of(p)
    _check_nonnegative("arctan_p", x)
    if x == 0.0:
        return 0.0
    r = p.reciprocal
    scale, w = _arc_kernels(x, p.p)
    return scale * hyp2f1(HypergeometricArgs(r, r, 1.0 + r, w))


def arcsinh_p(p: Union[PExponent, float], x: float) -> float:
    """
    x (1 + x^p)^(-1/p) F(1, 1/p; 1 + 1/p; x^p / (1 + x^p)) for x >= 0.
    """
    p = PExponent.of(p)
    _check_nonnegative("arcsinh_p", x)
    if x == 0.0:
        return 0.0
    r = p.reciprocal
    scale, w = _arc_kernels(x, p.p)
    return scale * hyp2f1(HypergeometricArgs(1.0, r, 1.0 + r, w))


def arctanh_p(p: Union[PExponent, float], x: float) -> float:
    """
    x F(1, 1/p; 1 + 1/p; x^p) for x in [0, 1); the function diverges at 1.
    """
    p = PExponent.of(p)
    _check_unit("arctanh_p", x, include_one=False)
    if x == 0.0:
        return 0.0
    r = p.reciprocal
    z, w = _unit_power(x, p.p)
    return x * hyp2f1(HypergeometricArgs(1.0, r, 1.0 + r, z, one_minus_z=w))


def arccosh_p(p: Union[PExponent, float], t: float) -> float:
    """arcsinh_p((t^p - 1)^(1/p)) for t >= 1."""
    p = PExponent.of(p)
    if not (math.isfinite(t) and t >= 1.0):
        raise DomainError(f"arccosh_p needs t >= 1, got {t}")
    if t == 1.0:
        return 0.0
    # t (1 - t^-p)^(1/p) keeps t^p from overflowing
    return arcsinh_p(p, t * (-math.expm1(-p.p * math.log(t))) ** p.reciprocal)


def j_p(p: Union[PExponent, float], x: float) -> float:
    """
    int_0^x (1 + t^p)^(1/p) dt = x F(-1/p, 1/p; 1 + 1/p; -x^p) for x >= 0.
    """
    p = PExponent.of(p)
    _check_nonnegative("j_p", x)
    if x == 0.0:
        return 0.0
    r = p.reciprocal
    return x * hyp2f1(HypergeometricArgs(-r, r, 1.0 + r, -(x ** p.p)))


def arcsin_p_complement_integral(p: Union[PExponent, float], x: float) -> float:
    """
    int_0^x (1 - t^p)^(1/p) dt = (1/p) B(1/p, 1 + 1/p) I(1/p, 1 + 1/p; x^p), I the normalized incomplete beta.
    """
    p = PExponent.of(p)
    _check_unit("arcsin_p_complement_integral", x, include_one=True)
    r = p.reciprocal
    return r * beta(r, 1.0 + r) * beta_incomplete(r, 1.0 + r, x ** p.p)


def _principal_angle(p: PExponent, theta: float) -> tuple[float, float]:
    """Reduce theta to [0, pi_p / 2] with the sign sin_p picks up on the way."""
    if not math.isfinite(theta):
        raise DomainError(f"sin_p needs a finite angle, got {theta}")
    half_period = pi_p(p)
    sign = 1.0
    if theta < 0.0:
        sign, theta = -1.0, -theta
    theta = math.fmod(theta, 2.0 * half_period)
    if theta > half_period:
        sign, theta = -sign, 2.0 * half_period - theta
    if theta > 0.5 * half_period:
        theta = half_period - theta
    return sign, min(max(theta, 0.0), 0.5 * half_period)


def _invert(p: PExponent, arc: Callable[[PExponent, float], float], theta: float) -> float:
    quarter = 0.5 * pi_p(p)
    if theta == 0.0:
        return 0.0
    if theta == quarter:
        return 1.0

    def residual(s: float) -> float:
        return arc(p, s) - theta

    try:
        return find_root(residual, RootBracket(0.0, 1.0, -theta, quarter - theta), tol=SIN_P_TOL)
    except NonConvergence as e:
        logger.warning("sin_p(%g, %g): inverse stalled at residual %.2e, keeping best iterate",
                       p.p, theta, e.error)
        return e.best


def sin_p(p: Union[PExponent, float], theta: float) -> float:
    """
    Inverse of arcsin_p on [0, pi_p / 2], extended by sin_p(pi_p - theta) = sin_p(theta),
    oddness and period 2 pi_p.

    :param p: Order, p > 1.
    :param theta: Any finite real.
    :return: sin_p(theta) in [-1, 1].
    """
    p = PExponent.of(p)
    sign, theta = _principal_angle(p, theta)
    return sign * _invert(p, arcsin_p, theta)


def _integrate_kernel(kernel, x: float, hi_singularity: float = 0.0, reflected=None, lo: float = 0.0) -> float:
    return integrate(Integrand(kernel, hi_singularity=hi_singularity, reflected=reflected), lo, x).value


def arcsin_p_quadrature(p: Union[PExponent, float], x: float) -> float:
    """
    Direct quadrature up to 1 - NEAR_ONE; closer to 1 the value is the whole
    integral over [0, 1] less the tail [x, 1], both with the singularity removed.
    """
    p = PExponent.of(p)
    _check_unit("arcsin_p", x, include_one=True)
    if x == 0.0:
        return 0.0
    q, r = p.p, p.reciprocal

    def kernel(t: float) -> float:
        return (1.0 - t ** q) ** -r

    if 1.0 - x >= NEAR_ONE:
        return _integrate_kernel(kernel, x)

    def reflected(d: float) -> float:
        return (-math.expm1(q * math.log1p(-d))) ** -r

    whole = _integrate_kernel(kernel, 1.0, hi_singularity=r, reflected=reflected)
    if x == 1.0:
        return whole
    return whole - _integrate_kernel(kernel, 1.0, hi_singularity=r, reflected=reflected, lo=x)


def arccos_p_quadrature(p: Union[PExponent, float], x: float) -> float:
    p = PExponent.of(p)
    _check_unit("arccos_p", x, include_one=True)
    return arcsin_p_quadrature(p, (1.0 - x ** p.p) ** p.reciprocal)


def arctan_p_quadrature(p: Union[PExponent, float], x: float) -> float:
    p = PExponent.of(p)
    _check_nonnegative("arctan_p", x)
    if x == 0.0:
        return 0.0
    q = p.p
    return _integrate_kernel(lambda t: 1.0 / (1.0 + t ** q), x)


def arcsinh_p_quadrature(p: Union[PExponent, float], x: float) -> float:
    p = PExponent.of(p)
    _check_nonnegative("arcsinh_p", x)
    if x == 0.0:
        return 0.0
    q, r = p.p, p.reciprocal
    return _integrate_kernel(lambda t: (1.0 + t ** q) ** -r, x)


def arctanh_p_quadrature(p: Union[PExponent, float], x: float) -> float:
    """
    Near x = 1 the logarithmic part -log(1 - x) / p is taken out and only the
    bounded remainder 1 / (1 - t^p) - 1 / (p (1 - t)) is integrated.
    """
    p = PExponent.of(p)
    _check_unit("arctanh_p", x, include_one=False)
    if x == 0.0:
        return 0.0
    q = p.p
    if 1.0 - x >= NEAR_ONE:
        return _integrate_kernel(lambda t: 1.0 / (1.0 - t ** q), x)

    def regular(t: float) -> float:
        if t == 0.0:
            return 1.0 - 1.0 / q
        d = 1.0 - t
        if d < REGULAR_PART_SERIES:
            return (q - 1.0) / (2.0 * q) + (q * q - 1.0) / (12.0 * q) * d
        return 1.0 / -math.expm1(q * math.log1p(-d)) - 1.0 / (q * d)

    return -math.log1p(-x) / q + _integrate_kernel(regular, x)


def arccosh_p_quadrature(p: Union[PExponent, float], t: float) -> float:
    p = PExponent.of(p)
    if not (math.isfinite(t) and t >= 1.0):
        raise DomainError(f"arccosh_p needs t >= 1, got {t}")
    return arcsinh_p_quadrature(p, (t ** p.p - 1.0) ** p.reciprocal)


def j_p_quadrature(p: Union[PExponent, float], x: float) -> float:
    p = PExponent.of(p)
    _check_nonnegative("j_p", x)
    if x == 0.0:
        return 0.0
    q, r = p.p, p.reciprocal
    return _integrate_kernel(lambda t: (1.0 + t ** q) ** r, x)


def arcsin_p_complement_quadrature(p: Union[PExponent, float], x: float) -> float:
    p = PExponent.of(p)
    _check_unit("arcsin_p_complement_integral", x, include_one=True)
    if x == 0.0:
        return 0.0
    q, r = p.p, p.reciprocal
    return _integrate_kernel(lambda t: (1.0 - t ** q) ** r, x)


def sin_p_quadrature(p: Union[PExponent, float], theta: float) -> float:
    """sin_p with the quadrature arcsin_p inverted; oracle for ``sin_p``."""
    p = PExponent.of(p)
    sign, theta = _principal_angle(p, theta)
    return sign * _invert(p, arcsin_p_quadrature, theta)
