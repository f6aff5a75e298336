"""
Gauss hypergeometric function 2F1(a, b; c; z) for real arguments and z < 1.

Evaluation paths:

* 0 <= z <= 1/2: the defining power series.
* z < 0: Pfaff's transformation F(a,b;c;z) = (1-z)^-b F(b, c-a; c; z/(z-1)),
  which lands the argument in (0, 1).
* 1/2 < z < 1: the connection formulas in 1 - z. When c - a - b is not an
  integer the two-term Gauss formula is used; when c - a - b = 0 the
  logarithmic series with digamma coefficients. Any other integer gap falls
  back to the direct series with a geometric tail bound.

``hyp2f1_integral`` is the Euler integral by quadrature and is used as an
independent oracle.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

from scipy import special as sp

from quadrature.exceptions import DomainError, NonConvergence
from quadrature.integrals import Integrand, integrate

from .functions import beta

logger = logging.getLogger(__name__)

SERIES_REL_TOL = 1e-17
MAX_SERIES_TERMS = 100_000
EULER_GAMMA = 0.5772156649015329
# c - a - b closer than this to an integer is treated as that integer; sums
# like (1 + 1/p) - 1 - 1/p leave a residue of a few ulps.
INTEGER_GAP_TOL = 1e-12


def _is_nonpositive_integer(v: float) -> bool:
    return v <= 0 and v == math.floor(v)


@dataclass(frozen=True)
class HypergeometricArgs:
    """
    Parameters of 2F1(a, b; c; z).

    ``one_minus_z`` is 1 - z when the caller can form it without cancellation,
    e.g. as -expm1(p log x) for z = x^p near 1; the connection formulas use it.
    """
    a: float
    b: float
    c: float
    z: float
    one_minus_z: Optional[float] = None

    def __post_init__(self):
        for name in ("a", "b", "c", "z"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"2F1 argument {name} must be finite, got {getattr(self, name)}")
        if _is_nonpositive_integer(self.c):
            raise DomainError(f"2F1 is undefined for c a non-positive integer, got c={self.c}")
        if self.one_minus_z is not None and not (math.isfinite(self.one_minus_z) and self.one_minus_z > 0.0):
            raise DomainError(f"2F1 needs 1 - z > 0, got one_minus_z={self.one_minus_z}")

    @property
    def w(self) -> float:
        return 1.0 - self.z if self.one_minus_z is None else self.one_minus_z


def _series(a: float, b: float, c: float, z: float, tail_factor: float = 1.0) -> float:
    """
    Partial sums of sum (a)_n (b)_n / (c)_n z^n / n!.

    Stops after two consecutive terms satisfy |term| * tail_factor < SERIES_REL_TOL * |sum|.
    """
    total = term = 1.0
    small_terms = 0
    for n in range(MAX_SERIES_TERMS):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if term == 0.0:
            return total
        if abs(term) * tail_factor < SERIES_REL_TOL * abs(total):
            small_terms += 1
            if small_terms == 2:
                return total
        else:
            small_terms = 0
    raise NonConvergence(f"2F1({a}, {b}; {c}; {z}) series did not settle in {MAX_SERIES_TERMS} terms", best=total)


def _gauss_connection(a: float, b: float, c: float, w: float) -> float:
    gap = c - a - b
    first = sp.gamma(c) * sp.gamma(gap) * sp.rgamma(c - a) * sp.rgamma(c - b)
    second = sp.gamma(c) * sp.gamma(-gap) * sp.rgamma(a) * sp.rgamma(b)
    value = first * _series(a, b, 1.0 - gap, w)
    if second != 0.0:
        value += second * w ** gap * _series(c - a, c - b, 1.0 + gap, w)
    return float(value)


def _logarithmic_connection(a: float, b: float, w: float) -> float:
    """F(a, b; a+b; z) near z = 1, where the Gauss formula degenerates; w = 1 - z."""
    log_w = math.log(w)
    psi_n1, psi_an, psi_bn = -EULER_GAMMA, float(sp.psi(a)), float(sp.psi(b))
    coefficient = 1.0
    total = coefficient * (2.0 * psi_n1 - psi_an - psi_bn - log_w)
    small_terms = 0
    for n in range(MAX_SERIES_TERMS):
        coefficient *= (a + n) * (b + n) / ((n + 1) * (n + 1)) * w
        psi_n1 += 1.0 / (n + 1)
        psi_an += 1.0 / (a + n)
        psi_bn += 1.0 / (b + n)
        term = coefficient * (2.0 * psi_n1 - psi_an - psi_bn - log_w)
        total += term
        if abs(term) < SERIES_REL_TOL * abs(total):
            small_terms += 1
            if small_terms == 2:
                break
        else:
            small_terms = 0
    else:
        raise NonConvergence(f"2F1({a}, {b}; {a + b}; 1 - {w}) logarithmic series did not settle", best=total)
    return float(sp.gamma(a + b) * sp.rgamma(a) * sp.rgamma(b) * total)


def _evaluate(a: float, b: float, c: float, z: float, w: float) -> float:
    if z >= 1.0:
        raise DomainError(f"2F1 is only evaluated for z < 1, got z={z}")
    if z == 0.0:
        return 1.0
    if z < 0.0:
        logger.debug("2F1(%g, %g; %g; %g): Pfaff transformation", a, b, c, z)
        return w ** (-b) * _evaluate(b, c - a, c, z / (z - 1.0), 1.0 / w)
    if z <= 0.5 or _is_nonpositive_integer(a) or _is_nonpositive_integer(b):
        return _series(a, b, c, z)

    gap = c - a - b
    nearest = round(gap)
    if abs(gap - nearest) > INTEGER_GAP_TOL:
        logger.debug("2F1(%g, %g; %g; %g): Gauss connection in 1-z", a, b, c, z)
        return _gauss_connection(a, b, c, w)
    if nearest == 0:
        logger.debug("2F1(%g, %g; %g; %g): logarithmic connection in 1-z", a, b, c, z)
        return _logarithmic_connection(a, b, w)
    logger.debug("2F1(%g, %g; %g; %g): integer gap %d, direct series", a, b, c, z, nearest)
    return _series(a, b, c, z, tail_factor=1.0 / w)


def hyp2f1(args: HypergeometricArgs) -> float:
    """
    Evaluate 2F1(a, b; c; z) for z < 1.

    :param args: Validated parameters.
    :return: The function value.
    :raises DomainError: z >= 1.
    :raises NonConvergence: a series exhausted its term budget.
    """
    return _evaluate(args.a, args.b, args.c, args.z, args.w)


def hyp2f1_series(args: HypergeometricArgs) -> float:
    """The bare power series, valid for |z| < 1; no transformation is applied."""
    if abs(args.z) >= 1.0:
        raise DomainError(f"The 2F1 power series needs |z| < 1, got z={args.z}")
    return _series(args.a, args.b, args.c, args.z)


def hyp2f1_integral(args: HypergeometricArgs) -> float:
    """
    Euler's integral, Gamma(c) / (Gamma(b) Gamma(c-b)) * int_0^1 t^(b-1) (1-t)^(c-b-1) (1-zt)^-a dt.

    Requires c > b > 0.
    """
    a, b, c, z = args.a, args.b, args.c, args.z
    if not c > b > 0:
        raise DomainError(f"The integral representation of 2F1 needs c > b > 0, got b={b}, c={c}")
    if z >= 1.0:
        raise DomainError(f"2F1 is only evaluated for z < 1, got z={z}")

    def kernel(t: float) -> float:
        return t ** (b - 1.0) * (1.0 - t) ** (c - b - 1.0) * (1.0 - z * t) ** (-a)

    def reflected(d: float) -> float:
        return (1.0 - d) ** (b - 1.0) * d ** (c - b - 1.0) * (1.0 - z + z * d) ** (-a)

    f = Integrand(kernel, lo_singularity=max(0.0, 1.0 - b), hi_singularity=max(0.0, 1.0 - (c - b)),
                  reflected=reflected)
    return integrate(f, 0.0, 1.0).value / beta(b, c - b)
