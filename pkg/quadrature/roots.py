import logging
import math
from dataclasses import dataclass
from typing import Callable

from scipy import optimize

from .exceptions import DomainError, NoSignChange, NonConvergence

logger = logging.getLogger(__name__)

ROOT_TOL = 1e-12
MAX_ITERATIONS = 200

# brentq refuses rtol below four machine epsilons
_RTOL = 4.0 * 2.220446049250313e-16
_XTOL = 1e-300


@dataclass(frozen=True)
class RootBracket:
    """
    An interval on which a continuous function changes sign.

    :param lo: Left end.
    :param hi: Right end, strictly greater than ``lo``.
    :param f_lo: f(lo).
    :param f_hi: f(hi); f_lo * f_hi must be negative.
    """
    lo: float
    hi: float
    f_lo: float
    f_hi: float

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)) or not self.lo < self.hi:
            raise DomainError(f"Root bracket needs finite lo < hi, got [{self.lo}, {self.hi}]")
        if math.isnan(self.f_lo) or math.isnan(self.f_hi) or not self.f_lo * self.f_hi < 0:
            raise NoSignChange(
                f"f does not change sign on [{self.lo}, {self.hi}]: f(lo)={self.f_lo}, f(hi)={self.f_hi}"
            )

    @classmethod
    def around(cls, f: Callable[[float], float], lo: float, hi: float) -> 'RootBracket':
        """Evaluate ``f`` at both ends and build the bracket."""
        return cls(lo=lo, hi=hi, f_lo=f(lo), f_hi=f(hi))


def _bisect(f: Callable[[float], float], bracket: RootBracket) -> float:
    lo, hi, f_lo, f_hi = bracket.lo, bracket.hi, bracket.f_lo, bracket.f_hi
    for _ in range(MAX_ITERATIONS):
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            break
        f_mid = f(mid)
        if f_mid == 0.0:
            return mid
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi, f_hi = mid, f_mid
    return lo if abs(f_lo) <= abs(f_hi) else hi


def find_root(f: Callable[[float], float], bracket: RootBracket, tol: float = ROOT_TOL) -> float:
    """
    Find x in [bracket.lo, bracket.hi] with f(x) = 0 (Brent's method, bisection-safe).

    :param f: Continuous function with a sign change on the bracket.
    :param bracket: The sign-changing interval.
    :param tol: Largest acceptable |f(x)| at the returned point.
    :return: The root.
    :raises NonConvergence: when |f| cannot be brought below ``tol``; ``best`` holds the final iterate.
    """
    root, info = optimize.brentq(f, bracket.lo, bracket.hi, xtol=_XTOL, rtol=_RTOL,
                                 maxiter=MAX_ITERATIONS, full_output=True, disp=False)
    if not info.converged:
        logger.debug("brentq stopped after %d iterations on [%g, %g], bisecting",
                     info.iterations, bracket.lo, bracket.hi)
        root = _bisect(f, bracket)

    residual = f(root)
    if abs(residual) > tol:
        raise NonConvergence(f"Root on [{bracket.lo}, {bracket.hi}] has residual {residual:.3e} above {tol:.1e}",
                             best=root, error=abs(residual))
    return root
