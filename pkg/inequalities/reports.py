"""
Claim reports: status classification, summaries and the CSV / JSON report formats.
"""
import csv
import json
import logging
import math
from dataclasses import dataclass
from typing import IO, Iterable, Optional

from django.conf import settings

from quadrature.exceptions import NumericsError
from quadrature.formatting import format_number

from .claims import AS_PRINTED, ClaimPoint, InequalityClaim

logger = logging.getLogger(__name__)

DEFAULT_TOL = 1e-12

HOLDS = "holds"
EQUALITY = "holds-with-equality"
VIOLATED = "violated"
ERROR = "error"

COLUMNS = ("claim_id", "clause", "variant", "p", "q", "a", "b", "x", "lhs", "rhs", "margin", "status")
_NUMERIC = ("p", "q", "a", "b", "x", "lhs", "rhs", "margin")


def resolve_tolerance(tol: Optional[float] = None) -> float:
    """The explicit tolerance, else PMEAN_TOL from the settings."""
    value = getattr(settings, "PMEAN_TOL", DEFAULT_TOL) if tol is None else tol
    if not (math.isfinite(value) and value >= 0.0):
        raise ValueError(f"Tolerance must be a finite number >= 0, got {value}")
    return value


def classify(margin: float, tol: float) -> str:
    if math.isnan(margin):
        return ERROR
    if margin < -tol:
        return VIOLATED
    if margin <= tol:
        return EQUALITY
    return HOLDS


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    clause: str
    variant: str
    p: Optional[float]
    q: Optional[float]
    a: Optional[float]
    b: Optional[float]
    x: Optional[float]
    lhs: Optional[float]
    rhs: Optional[float]
    margin: Optional[float]
    status: str
    # not a report column; counted in summaries
    strict_equality: bool = False

    @property
    def governs_exit(self) -> bool:
        return self.variant != AS_PRINTED

    def as_row(self) -> dict[str, str]:
        row = {}
        for name in COLUMNS:
            value = getattr(self, name)
            row[name] = format_number(value) if name in _NUMERIC else value
        return row

    def as_json(self) -> dict:
        data = {}
        for name in COLUMNS:
            value = getattr(self, name)
            if name in _NUMERIC and value is not None:
                # the same 15 digits the CSV carries
                value = float(format_number(value))
            data[name] = value
        return data

    @classmethod
    def from_row(cls, row: dict) -> 'ClaimReport':
        values = {}
        for name in COLUMNS:
            raw = row[name]
            if name in _NUMERIC:
                values[name] = None if raw in ("", None) else float(raw)
            else:
                values[name] = raw
        return cls(**values)


def evaluate(claim: InequalityClaim, point: ClaimPoint, tol: Optional[float] = None) -> ClaimReport:
    """
    Evaluate one clause at one point. Numerical failures become ``error`` rows.
    """
    tol = resolve_tolerance(tol)
    x = point.x if claim.domain.uses_x else None
    try:
        sides = claim.evaluate(point)
        lhs, rhs = float(sides.lhs), float(sides.rhs)
        if sides.x is not None:
            x = sides.x
        margin = rhs - lhs
        status = classify(margin, tol)
        strict_equality = status == EQUALITY and claim.strict_equality(point, margin, tol)
    except (NumericsError, ValueError, ArithmeticError) as e:
        logger.warning("%s %s (%s) failed at %s: %s", claim.id, claim.clause, claim.variant, point, e)
        lhs = rhs = margin = None
        status = ERROR
        strict_equality = False

    if status == VIOLATED:
        logger.debug("%s %s (%s) violated at %s by %.3e", claim.id, claim.clause, claim.variant, point, -margin)
    if strict_equality:
        logger.warning("%s %s (%s) is strict but equal within %.1e at %s", claim.id, claim.clause, claim.variant,
                       tol, point)
    return ClaimReport(
        claim_id=claim.id,
        clause=claim.clause,
        variant=claim.variant,
        p=point.p if claim.domain.uses_p else None,
        q=point.q if claim.domain.uses_q else None,
        a=point.pair.a,
        b=point.pair.b,
        x=x,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        status=status,
        strict_equality=strict_equality,
    )


def evaluate_all(claims: Iterable[InequalityClaim], point: ClaimPoint,
                 tol: Optional[float] = None) -> list[ClaimReport]:
    """Every clause whose domain contains the point."""
    return [evaluate(claim, point, tol) for claim in claims if claim.domain.contains(point)]


@dataclass(frozen=True)
class ClaimSummary:
    claim_id: str
    variant: str
    points: int
    min_margin: Optional[float]
    equalities: int
    violations: int
    errors: int
    strict_equalities: int = 0

    @property
    def governs_exit(self) -> bool:
        return self.variant != AS_PRINTED


def summarize(reports: Iterable[ClaimReport]) -> list[ClaimSummary]:
    """One summary per (claim id, variant) in order of first appearance."""
    groups: dict[tuple[str, str], list[ClaimReport]] = {}
    for report in reports:
        groups.setdefault((report.claim_id, report.variant), []).append(report)

    summaries = []
    for (claim_id, variant), rows in groups.items():
        margins = [row.margin for row in rows if row.margin is not None]
        summaries.append(ClaimSummary(
            claim_id=claim_id,
            variant=variant,
            points=len(rows),
            min_margin=min(margins) if margins else None,
            equalities=sum(row.status == EQUALITY for row in rows),
            violations=sum(row.status == VIOLATED for row in rows),
            errors=sum(row.status == ERROR for row in rows),
            strict_equalities=sum(row.strict_equality for row in rows),
        ))
    return summaries


def write_csv(reports: Iterable[ClaimReport], stream: IO[str]):
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(report.as_row())


def read_csv(stream: IO[str]) -> list[ClaimReport]:
    return [ClaimReport.from_row(row) for row in csv.DictReader(stream)]


def write_json(reports: Iterable[ClaimReport], stream: IO[str]):
    json.dump([report.as_json() for report in reports], stream, indent=2)
    stream.write("\n")


def read_json(stream: IO[str]) -> list[ClaimReport]:
    return [ClaimReport.from_row(row) for row in json.load(stream)]
