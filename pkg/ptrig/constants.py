"""
The constants pi_p, a_p = pi_p / 2, b_p = arctan_p(1) and c_p = arcsinh_p(1).

Every constant is computed along independent paths; ``constants`` returns
one value per constant together with the largest pairwise disagreement.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from special.functions import beta, digamma
from special.hypergeometric import HypergeometricArgs, hyp2f1

from .functions import PExponent, arcsin_p_quadrature, arcsinh_p_quadrature, arctan_p_quadrature, pi_p

logger = logging.getLogger(__name__)

AGREEMENT_TOL = 1e-10


def pi_p_beta(p: Union[PExponent, float]) -> float:
    """(2/p) B(1 - 1/p, 1/p)."""
    r = PExponent.of(p).reciprocal
    return 2.0 * r * beta(1.0 - r, r)


def pi_p_quadrature(p: Union[PExponent, float]) -> float:
    """2 arcsin_p(1) by improper quadrature."""
    return 2.0 * arcsin_p_quadrature(p, 1.0)


def b_p_quadrature(p: Union[PExponent, float]) -> float:
    return arctan_p_quadrature(p, 1.0)


def b_p_digamma(p: Union[PExponent, float]) -> float:
    """(1 / 2p) (psi((1 + p) / 2p) - psi(1 / 2p))."""
    p = PExponent.of(p).p
    return (digamma((1.0 + p) / (2.0 * p)) - digamma(1.0 / (2.0 * p))) / (2.0 * p)


def b_p_hypergeometric(p: Union[PExponent, float]) -> float:
    """2^(-1/p) F(1/p, 1/p; 1 + 1/p; 1/2)."""
    r = PExponent.of(p).reciprocal
    return 2.0 ** -r * hyp2f1(HypergeometricArgs(r, r, 1.0 + r, 0.5))


def c_p_hypergeometric(p: Union[PExponent, float]) -> float:
    """2^(-1/p) F(1, 1/p; 1 + 1/p; 1/2)."""
    r = PExponent.of(p).reciprocal
    return 2.0 ** -r * hyp2f1(HypergeometricArgs(1.0, r, 1.0 + r, 0.5))


def c_p_quadrature(p: Union[PExponent, float]) -> float:
    return arcsinh_p_quadrature(p, 1.0)


def _spread(*values: float) -> float:
    return max(values) - min(values)


@dataclass(frozen=True)
class PConstants:
    """
    :param pi_p: 2 pi / (p sin(pi / p)).
    :param a_p: pi_p / 2.
    :param b_p: arctan_p(1), hypergeometric path.
    :param c_p: arcsinh_p(1), hypergeometric path.
    :param pi_residual: Largest disagreement among the three pi_p paths.
    :param b_residual: Largest disagreement among the three b_p paths.
    :param c_residual: Disagreement between the two c_p paths.
    """
    p: float
    pi_p: float
    a_p: float
    b_p: float
    c_p: float
    pi_residual: float
    b_residual: float
    c_residual: float

    @property
    def max_residual(self) -> float:
        return max(self.pi_residual, self.b_residual, self.c_residual)


@lru_cache(maxsize=256)
def _constants(p: float) -> PConstants:
    closed = pi_p(p)
    b_value = b_p_hypergeometric(p)
    c_value = c_p_hypergeometric(p)
    result = PConstants(
        p=p,
        pi_p=closed,
        a_p=0.5 * closed,
        b_p=b_value,
        c_p=c_value,
        pi_residual=_spread(closed, pi_p_beta(p), pi_p_quadrature(p)),
        b_residual=_spread(b_value, b_p_digamma(p), b_p_quadrature(p)),
        c_residual=_spread(c_value, c_p_quadrature(p)),
    )
    if result.max_residual > AGREEMENT_TOL:
        logger.warning("Constant paths disagree at p=%g: pi %.2e, b %.2e, c %.2e",
                       p, result.pi_residual, result.b_residual, result.c_residual)
    return result


def constants(p: Union[PExponent, float]) -> PConstants:
    """
    pi_p, a_p, b_p and c_p for order p, with cross-path residuals. Memoized per p.

    :param p: Order, p > 1.
    :raises DomainError: p <= 1.
    """
    return _constants(PExponent.of(p).p)


def a_p_printed() -> float:
    """The a_p = pi / 2 convention; it agrees with pi_p / 2 only at p = 2."""
    return 0.5 * math.pi
