"""
Classical bivariate means, the power mean, the arithmetic-geometric mean and
the integral mean of Bhatia and Li.

Every mean is homogeneous of degree one and is evaluated on an ordered pair
a >= b > 0. With x = (a - b) / (a + b) and A = (a + b) / 2 the Seiffert-type
means are A x / arc(x) for the classical arc functions:

    L = A x / artanh(x)    P = A x / arcsin(x)
    T = A x / arctan(x)    M = A x / arsinh(x)
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

from quadrature.exceptions import DomainError
from quadrature.integrals import Integrand, integrate_semi_infinite

logger = logging.getLogger(__name__)

AGM_TOL = 1e-15
AGM_MAX_ITERATIONS = 100

CLASSICAL_KINDS = ("A", "G", "L", "P", "T", "M", "Q")

_CLASSICAL_ARCS = {
    "L": math.atanh,
    "P": math.asin,
    "T": math.atan,
    "M": math.asinh,
}


@dataclass(frozen=True)
class MeanInput:
    """
    An ordered pair a >= b > 0. Pairs given as b > a are swapped.
    """
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b) and self.a > 0 and self.b > 0):
            raise DomainError(f"Means need two finite positive numbers, got a={self.a}, b={self.b}")
        if self.a < self.b:
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    @property
    def x(self) -> float:
        return (self.a - self.b) / (self.a + self.b)

    @property
    def A(self) -> float:
        return 0.5 * (self.a + self.b)

    @property
    def G(self) -> float:
        return math.sqrt(self.a) * math.sqrt(self.b)

    @property
    def equal(self) -> bool:
        return self.a == self.b

    def scaled(self, factor: float) -> 'MeanInput':
        return MeanInput(self.a * factor, self.b * factor)

    @classmethod
    def normalized(cls, x: float) -> 'MeanInput':
        """The pair (1 + x, 1 - x): A = 1 and (a - b) / (a + b) = x."""
        if not 0.0 <= x < 1.0:
            raise DomainError(f"Normalized coordinate x must lie in [0, 1), got {x}")
        return cls(1.0 + x, 1.0 - x)


@dataclass(frozen=True)
class MeanValue:
    value: float
    family: str
    p: Optional[float] = None

    @property
    def label(self) -> str:
        return self.family if self.p is None else f"{self.family}[p={self.p:g}]"


def classical(kind: str, pair: MeanInput) -> MeanValue:
    """
    :param kind: One of A, G, L, P, T, M, Q.
    :param pair: Ordered input pair.
    :return: The mean; every kind returns the common value when a = b.
    """
    if kind not in CLASSICAL_KINDS:
        raise DomainError(f"Unknown classical mean '{kind}', expected one of {', '.join(CLASSICAL_KINDS)}")

    if kind == "A":
        value = pair.A
    elif kind == "G":
        value = pair.G
    elif kind == "Q":
        value = pair.a * math.sqrt(0.5 * (1.0 + (pair.b / pair.a) ** 2))
    elif pair.equal:
        value = pair.a
    else:
        x = pair.x
        value = pair.A * x / _CLASSICAL_ARCS[kind](x)
    return MeanValue(value=value, family=kind)


def power_mean(p: float, pair: MeanInput) -> MeanValue:
    """
    ((a^p + b^p) / 2)^(1/p), continuous at p = 0 where it is the geometric mean.
    """
    if not math.isfinite(p):
        raise DomainError(f"Power mean order must be finite, got {p}")
    if p == 0.0:
        return MeanValue(value=pair.G, family="A_p", p=0.0)
    # factor out a so (b/a)^p stays in (0, 1] for p > 0
    ratio = (pair.b / pair.a) ** p
    value = pair.a * (0.5 * (1.0 + ratio)) ** (1.0 / p)
    return MeanValue(value=value, family="A_p", p=p)


def agm(pair: MeanInput, tol: float = AGM_TOL) -> MeanValue:
    """
    Gauss's arithmetic-geometric mean, iterated until |a_n - b_n| <= tol a_n.
    """
    if not tol > 0:
        raise DomainError(f"AGM tolerance must be positive, got {tol}")
    a, b = pair.a, pair.b
    for _ in range(AGM_MAX_ITERATIONS):
        if abs(a - b) <= tol * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return MeanValue(value=0.5 * (a + b), family="AGM")


def _bhatia_li_scaled(p: float, alpha: float, beta: float) -> float:
    """
    int_0^inf (1/p) y^(1/p - 1) ((y + alpha)(y + beta) / 4)^(-1/p) dy, the kernel after y = t^p.

    The factor 4^(1/p) keeps the integrand of order one near y = 1 when p is small.
    """
    r = 1.0 / p
    log_r = math.log(r)
    log_4 = math.log(4.0)

    def kernel(y: float) -> float:
        if y <= 0.0:
            return 0.0
        return math.exp(log_r + (r - 1.0) * math.log(y) - r * (math.log(y + alpha) + math.log(y + beta) - log_4))

    f = Integrand(kernel, lo_singularity=max(0.0, 1.0 - r))
    return integrate_semi_infinite(f, decay=1.0 + r).value


def bhatia_li_normalizer(p: float) -> float:
    """
    n_p = int_0^inf (1 + t^p)^(-2/p) dt, the value that makes the mean of (c, c) equal c.

    Closed form (1/p) B(1/p, 1/p); pi / 2 at p = 2.
    """
    if not (math.isfinite(p) and p > 0):
        raise DomainError(f"Bhatia-Li order must be positive, got {p}")
    return 4.0 ** (-1.0 / p) * _bhatia_li_scaled(p, 1.0, 1.0)


def bhatia_li(p: float, pair: MeanInput) -> MeanValue:
    """
    The interpolating mean n_p / int_0^inf ((t^p + a^p)(t^p + b^p))^(-1/p) dt.

    Equals L at p = 1 and the AGM at p = 2, and tends to G as p -> 0. The pair
    is rescaled by G first, leaving alpha = (a/b)^(p/2) and beta = 1/alpha.

    :param p: Order, p > 0.
    :param pair: Ordered input pair.
    """
    if not (math.isfinite(p) and p > 0):
        raise DomainError(f"Bhatia-Li order must be positive, got {p}")
    if pair.equal:
        return MeanValue(value=pair.a, family="BL", p=p)
    alpha = (pair.a / pair.b) ** (0.5 * p)
    value = pair.G * _bhatia_li_scaled(p, 1.0, 1.0) / _bhatia_li_scaled(p, alpha, 1.0 / alpha)
    logger.debug("Bhatia-Li p=%g (%g, %g): %.16g", p, pair.a, pair.b, value)
    return MeanValue(value=value, family="BL", p=p)
