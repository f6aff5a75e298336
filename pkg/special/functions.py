"""
Gamma, digamma, beta and the normalized incomplete beta for positive arguments.

Values come from ``scipy.special`` (Cephes); the defining integrals are kept
as quadrature oracles in the tests.
"""
import math

from scipy import special as sp

from quadrature.exceptions import DomainError


def _require_positive(**arguments: float):
    for name, value in arguments.items():
        if not (math.isfinite(value) and value > 0):
            raise DomainError(f"{name} must be a finite positive number, got {value}")


def gamma(x: float) -> float:
    """
    Gamma function for x > 0.

    :param x: Positive argument; the negative axis is not supported.
    :return: Gamma(x).
    """
    _require_positive(x=x)
    return float(sp.gamma(x))


def digamma(x: float) -> float:
    """
    Logarithmic derivative of the gamma function for x > 0.
    """
    _require_positive(x=x)
    return float(sp.psi(x))


def beta(x: float, y: float) -> float:
    """
    Complete beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y).

    Computed literally as that quotient, so B(x, y) == B(y, x) bit for bit.
    Falls back to exp(lnB) only when a gamma factor overflows.
    """
    _require_positive(x=x, y=y)
    gx, gy, gxy = sp.gamma(x), sp.gamma(y), sp.gamma(x + y)
    if math.isfinite(gx) and math.isfinite(gy) and math.isfinite(gxy):
        return float(gx * gy / gxy)
    return math.exp(float(sp.betaln(x, y)))


def beta_incomplete(x: float, y: float, s: float) -> float:
    """
    NORMALIZED incomplete beta, int_0^s u^(x-1) (1-u)^(y-1) du / B(x, y).

    Conventions differ between references; this one lies in [0, 1] and
    multiplying by ``beta(x, y)`` gives the plain integral.

    :param x: First shape parameter, > 0.
    :param y: Second shape parameter, > 0.
    :param s: Upper limit in [0, 1].
    """
    _require_positive(x=x, y=y)
    if not 0.0 <= s <= 1.0:
        raise DomainError(f"Incomplete beta upper limit must lie in [0, 1], got {s}")
    if s == 0.0:
        return 0.0
    if s == 1.0:
        return 1.0
    return float(sp.betainc(x, y, s))
