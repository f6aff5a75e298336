"""
Adaptive quadrature on finite and semi-infinite intervals.

The working scheme is QUADPACK's adaptive Gauss-Kronrod rule as exposed by
``scipy.integrate.quad``. ``integrate_tanh_sinh`` is an independent
double-exponential rule with open nodes; it exists so that every
special-function identity can be checked by two different node families.

Endpoint singularities: an ``Integrand`` may declare that it behaves like
(t - lo)**-alpha near ``lo`` or (hi - t)**-alpha near ``hi`` (0 < alpha < 1).
Before either scheme runs the singularity is removed by

    t = lo + (hi - lo) * u**(1 / (1 - alpha))      (mirrored for hi)

which turns the integrand into a bounded function of u on [0, 1]. For the
generalized inverse sine at x = 1 the exponent is 1/p, i.e. the substitution
is u = (1 - t)**(1 - 1/p) up to scaling. When both ends are singular the
interval is split at its midpoint. Close to hi, 1 - t**p computed from t
loses every digit, so integrands singular at hi should also supply
``reflected``, the same function written in terms of d = hi - t.

Semi-infinite intervals are compactified with t = lo + s / (1 - s). An
integrand decaying like t**-beta becomes (1 - s)**(beta - 2) near s = 1, so a
declared ``decay`` below 2 is turned into a hi-end singularity exponent.
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable

from scipy import integrate as sp_integrate

from .exceptions import DomainError, InvalidDomain, NonConvergence

logger = logging.getLogger(__name__)

ABS_TOL = 1e-13
REL_TOL = 1e-12
MAX_SUBDIVISIONS = 10_000

# QUADPACK flags roundoff once the estimate stalls; such results are kept when
# they are within this factor of the requested tolerance.
ROUNDOFF_SLACK = 10.0

# tanh-sinh: nodes beyond |t| = TS_T_MAX carry weights below 1e-20.
TS_T_MAX = 3.5
TS_MAX_LEVELS = 10
TS_MIN_LEVELS = 3

_HALF_PI = 0.5 * math.pi


@dataclass(frozen=True)
class Integrand:
    """
    A real integrand together with what the integrators need to know about it.

    :param evaluator: The function t -> f(t); must be finite on the open interval.
    :param lo_singularity: alpha for a (t - lo)**-alpha blow-up at the lower end, 0 if none.
    :param hi_singularity: alpha for a (hi - t)**-alpha blow-up at the upper end, 0 if none.
    :param abs_tol: Absolute error target.
    :param rel_tol: Relative error target.
    :param reflected: Optional d -> f(hi - d), accurate for small d. Used near a singular upper
        end, where hi - t can no longer be formed from t without cancellation.
    """
    evaluator: Callable[[float], float]
    lo_singularity: float = 0.0
    hi_singularity: float = 0.0
    abs_tol: float = ABS_TOL
    rel_tol: float = REL_TOL
    reflected: Callable[[float], float] | None = None

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise DomainError(f"Quadrature tolerances must be positive, got abs={self.abs_tol}, rel={self.rel_tol}")
        for alpha in (self.lo_singularity, self.hi_singularity):
            if not 0.0 <= alpha < 1.0:
                raise DomainError(f"Endpoint singularity exponent must lie in [0, 1), got {alpha}")

    def __call__(self, t: float) -> float:
        return self.evaluator(t)

    def tolerance(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))


@dataclass(frozen=True)
class QuadResult:
    value: float
    error_estimate: float
    subdivisions: int


def _lower_substitution(f: Callable[[float], float], lo: float, hi: float, alpha: float):
    k = 1.0 / (1.0 - alpha)
    width = hi - lo

    def g(u: float) -> float:
        t = lo + width * u ** k
        if t == lo:
            return 0.0
        return f(t) * width * k * u ** (k - 1.0)

    return g


def _upper_substitution(f: Integrand, lo: float, hi: float, alpha: float):
    k = 1.0 / (1.0 - alpha)
    width = hi - lo

    if f.reflected is not None:
        def g(u: float) -> float:
            d = width * u ** k
            if d == 0.0:
                return 0.0
            return f.reflected(d) * width * k * u ** (k - 1.0)
        return g

    def g(u: float) -> float:
        t = hi - width * u ** k
        if t == hi:
            return 0.0
        return f(t) * width * k * u ** (k - 1.0)

    return g


def _pieces(f: Integrand, lo: float, hi: float) -> list[tuple[Callable[[float], float], float, float]]:
    """Split [lo, hi] into bounded sub-problems, removing declared endpoint singularities."""
    if f.lo_singularity and f.hi_singularity:
        mid = 0.5 * (lo + hi)
        return [
            (_lower_substitution(f, lo, mid, f.lo_singularity), 0.0, 1.0),
            (_upper_substitution(f, mid, hi, f.hi_singularity), 0.0, 1.0),
        ]
    if f.lo_singularity:
        return [(_lower_substitution(f, lo, hi, f.lo_singularity), 0.0, 1.0)]
    if f.hi_singularity:
        return [(_upper_substitution(f, lo, hi, f.hi_singularity), 0.0, 1.0)]
    return [(f.evaluator, lo, hi)]


def _check_interval(lo: float, hi: float):
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise InvalidDomain(f"Interval [{lo}, {hi}] is not finite; use integrate_semi_infinite")
    if not lo < hi:
        raise InvalidDomain(f"Integration requires lo < hi, got [{lo}, {hi}]")


def _gauss_kronrod(g: Callable[[float], float], a: float, b: float, abs_tol: float, rel_tol: float):
    result = sp_integrate.quad(g, a, b, epsabs=abs_tol, epsrel=rel_tol, limit=MAX_SUBDIVISIONS, full_output=1)
    value, error, info = result[0], result[1], result[2]
    tolerance = max(abs_tol, rel_tol * abs(value))

    if len(result) > 3:
        message = str(result[3])
        if error <= tolerance:
            logger.debug("QUADPACK reported '%s' but the estimate %.3e meets tolerance", message, error)
        elif "roundoff" in message.lower() and error <= ROUNDOFF_SLACK * tolerance:
            logger.warning("Roundoff-limited quadrature on [%g, %g]: error %.3e, tolerance %.3e",
                           a, b, error, tolerance)
        else:
            raise NonConvergence(f"Adaptive quadrature on [{a}, {b}] did not converge: {message}",
                                 best=value, error=error)
    elif error > ROUNDOFF_SLACK * tolerance:
        raise NonConvergence(f"Adaptive quadrature on [{a}, {b}] stopped with error {error:.3e}",
                             best=value, error=error)

    return value, error, int(info["last"])


def integrate(f: Integrand, lo: float, hi: float) -> QuadResult:
    """
    Integrate ``f`` over the finite interval [lo, hi] with adaptive Gauss-Kronrod.

    :param f: Integrand with its tolerances and endpoint-singularity exponents.
    :param lo: Lower limit.
    :param hi: Upper limit, strictly greater than ``lo``.
    :return: QuadResult with value, error estimate and number of panels used.
    """
    _check_interval(lo, hi)
    pieces = _pieces(f, lo, hi)

    value = error = 0.0
    subdivisions = 0
    for g, a, b in pieces:
        v, e, n = _gauss_kronrod(g, a, b, f.abs_tol / len(pieces), f.rel_tol)
        value += v
        error += e
        subdivisions += n

    logger.debug("integrate [%g, %g]: %d piece(s), %d panels, value %.16g, error %.2e",
                 lo, hi, len(pieces), subdivisions, value, error)
    return QuadResult(value=value, error_estimate=error, subdivisions=subdivisions)


def integrate_semi_infinite(f: Integrand, lo: float = 0.0, decay: float | None = None) -> QuadResult:
    """
    Integrate ``f`` over [lo, inf) after the compactification t = lo + s / (1 - s).

    :param f: Integrand; ``lo_singularity`` refers to the finite end.
    :param lo: Finite lower limit.
    :param decay: beta such that f(t) = O(t**-beta) as t -> inf; must exceed 1 when given.
    :return: QuadResult of the compactified integral.
    """
    if not math.isfinite(lo):
        raise InvalidDomain(f"Lower limit must be finite, got {lo}")

    hi_singularity = 0.0
    if decay is not None:
        if decay <= 1.0:
            raise DomainError(f"An integrand decaying like t^-{decay} is not integrable at infinity")
        hi_singularity = max(0.0, 2.0 - decay)

    def compactified(s: float) -> float:
        one_minus_s = 1.0 - s
        return f(lo + s / one_minus_s) / (one_minus_s * one_minus_s)

    def compactified_tail(d: float) -> float:
        return f(lo + (1.0 - d) / d) / (d * d)

    compact = Integrand(
        evaluator=compactified,
        lo_singularity=f.lo_singularity,
        hi_singularity=hi_singularity,
        abs_tol=f.abs_tol,
        rel_tol=f.rel_tol,
        reflected=compactified_tail,
    )
    return integrate(compact, 0.0, 1.0)


def _tanh_sinh_piece(g: Callable[[float], float], a: float, b: float, abs_tol: float, rel_tol: float):
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)

    def node_sum(k_start: int, k_step: int, h: float) -> float:
        total = 0.0
        k = k_start
        while k * h <= TS_T_MAX:
            t = k * h
            v = _HALF_PI * math.sinh(t)
            weight = _HALF_PI * math.cosh(t) / math.cosh(v) ** 2
            # distance from the nearer endpoint, computed without cancellation
            gap = half * 2.0 / (math.exp(2.0 * v) + 1.0)
            left, right = a + gap, b - gap
            if left > a:
                total += weight * g(left)
            if right < b:
                total += weight * g(right)
            k += k_step
        return total

    h = 1.0
    raw = _HALF_PI * g(mid) + node_sum(1, 1, h)
    estimate = half * h * raw
    previous = None

    for level in range(1, TS_MAX_LEVELS + 1):
        h *= 0.5
        raw += node_sum(1, 2, h)
        previous, estimate = estimate, half * h * raw
        difference = abs(estimate - previous)
        if level >= TS_MIN_LEVELS and difference <= max(abs_tol, rel_tol * abs(estimate)):
            return estimate, difference, level

    raise NonConvergence(f"tanh-sinh quadrature on [{a}, {b}] did not settle after {TS_MAX_LEVELS} levels",
                         best=estimate, error=abs(estimate - previous))


def integrate_tanh_sinh(f: Integrand, lo: float, hi: float) -> QuadResult:
    """
    Integrate ``f`` over [lo, hi] with the double-exponential (tanh-sinh) rule.

    Independent of ``integrate``: different nodes, open rule, error taken as the
    difference between the last two mesh halvings. ``subdivisions`` counts levels.
    """
    _check_interval(lo, hi)
    pieces = _pieces(f, lo, hi)

    value = error = 0.0
    levels = 0
    for g, a, b in pieces:
        v, e, n = _tanh_sinh_piece(g, a, b, f.abs_tol / len(pieces), f.rel_tol)
        value += v
        error += e
        levels += n

    logger.debug("tanh-sinh [%g, %g]: %d level(s), value %.16g, error %.2e", lo, hi, levels, value, error)
    return QuadResult(value=value, error_estimate=error, subdivisions=levels)
