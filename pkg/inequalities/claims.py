"""
Executable inequality claims.

A claim is one clause of a theorem, corollary or integral lemma about the
generalized means. It is evaluated at a point (p, q, a, b) and returns the
two sides of the inequality oriented so that rhs - lhs >= 0 means it holds.
Clauses whose printed form disagrees with the form reconstructed from the
proof are registered twice, once per variant.
"""
import math
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from means.bivariate import MeanInput
from quadrature.exceptions import DomainError

COMMON = "common"
AS_DERIVED = "as-derived"
AS_PRINTED = "as-printed"
VARIANTS = (COMMON, AS_DERIVED, AS_PRINTED)


# Points with x^order below this sit on the x -> 0 limit, where every mean
# tends to A and strict clauses close up to equality.
DEGENERATE_SCALE = 1e-6


def near_degenerate(point: 'ClaimPoint') -> bool:
    """The default equality locus of strict clauses: x -> 0 at the larger order in play."""
    order = max([value for value in (point.p, point.q) if value is not None] + [2.0])
    return point.x ** order <= DEGENERATE_SCALE


@dataclass(frozen=True)
class ClaimPoint:
    """
    A point of evaluation. ``p`` and ``q`` are None for claims that do not use them.
    """
    p: Optional[float]
    q: Optional[float]
    pair: MeanInput

    @property
    def x(self) -> float:
        return self.pair.x

    @classmethod
    def normalized(cls, x: float, p: Optional[float] = None, q: Optional[float] = None) -> 'ClaimPoint':
        """The point with a + b = 2, so A = 1 and (a - b) / (a + b) = x."""
        return cls(p=p, q=q, pair=MeanInput.normalized(x))

    def as_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "a": self.pair.a, "b": self.pair.b}

    @classmethod
    def from_dict(cls, data: dict) -> 'ClaimPoint':
        return cls(p=data["p"], q=data["q"], pair=MeanInput(data["a"], data["b"]))


class Sides(NamedTuple):
    """Both sides of a clause; ``x`` overrides the point's x for clauses that solve for it."""
    lhs: float
    rhs: float
    x: Optional[float] = None


@dataclass(frozen=True)
class Domain:
    """
    The parameter box on which a claim is stated.

    :param p_min: Lower bound on p.
    :param p_open: p > p_min instead of p >= p_min.
    :param uses_p: False for claims at fixed orders.
    :param uses_q: Claim compares orders p and q.
    :param q_above_p: Requires q > p; otherwise q only has to satisfy the p bound.
    :param uses_x: False for claims that solve for x themselves.
    """
    p_min: float = 2.0
    p_open: bool = False
    uses_p: bool = True
    uses_q: bool = False
    q_above_p: bool = True
    uses_x: bool = True

    def _order_ok(self, value: Optional[float]) -> bool:
        if value is None or not math.isfinite(value):
            return False
        return value > self.p_min if self.p_open else value >= self.p_min

    def contains(self, point: ClaimPoint) -> bool:
        if self.uses_p and not self._order_ok(point.p):
            return False
        if self.uses_q:
            if not self._order_ok(point.q):
                return False
            if self.q_above_p and not point.q > point.p:
                return False
        if self.uses_x and not 0.0 < point.x < 1.0:
            return False
        return True

    def describe(self) -> str:
        parts = []
        if self.uses_p:
            parts.append(f"p {'>' if self.p_open else '>='} {self.p_min:g}")
        if self.uses_q:
            parts.append("q > p" if self.q_above_p else f"q >= {self.p_min:g}")
        if self.uses_x:
            parts.append("0 < x < 1")
        return ", ".join(parts) or "fixed orders"


STANDARD = Domain()
ORDERED_PAIR = Domain(p_min=1.0, p_open=True, uses_q=True)
ORDERED_PAIR_FROM_2 = Domain(uses_q=True)


@dataclass(frozen=True)
class InequalityClaim:
    """
    :param id: Claim identifier, T1..T8, C1..C6 or L1..L6.
    :param clause: Name of the clause within the claim.
    :param evaluate: Maps a point to its two sides.
    :param variant: ``common`` when printed and derived forms coincide.
    :param strict: The clause is stated with a strict inequality.
    :param domain: Where the clause is stated.
    :param equality_locus: Points where a strict clause may still come out equal.
    """
    id: str
    clause: str
    evaluate: Callable[[ClaimPoint], Sides]
    variant: str = COMMON
    strict: bool = True
    domain: Domain = STANDARD
    description: str = ""
    equality_locus: Callable[[ClaimPoint], bool] = near_degenerate

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise DomainError(f"Unknown claim variant '{self.variant}'")

    @property
    def key(self) -> str:
        return f"{self.id}|{self.clause}|{self.variant}"

    @property
    def governs_exit(self) -> bool:
        """Violations of as-printed forms are reported but do not fail a run."""
        return self.variant != AS_PRINTED

    def strict_equality(self, point: ClaimPoint, margin: float, tol: float) -> bool:
        """A strict clause equal within ``tol`` away from its equality locus."""
        return self.strict and abs(margin) <= tol and not self.equality_locus(point)
