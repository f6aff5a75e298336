"""
Grid scans over the claim registry.

Work is split into chunks of ``PMEAN_SCAN_CHUNK`` (claim, point) pairs that
run as Celery tasks; with eager execution they run in-process. Reports are
put back in a fixed order whatever order the chunks finish in.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np
from django.conf import settings

from means.bivariate import MeanInput
from quadrature.exceptions import DomainError

from .claims import ClaimPoint, Domain, InequalityClaim
from .registry import CLAIM_IDS, position
from .reports import ClaimReport, resolve_tolerance
from .tasks import evaluate_chunk

logger = logging.getLogger(__name__)

DEFAULT_CHUNK = 64


@dataclass(frozen=True)
class AxisRange:
    """
    ``count`` values from ``lo`` to ``hi``, evenly or geometrically spaced.
    """
    lo: float
    hi: float
    count: int
    log: bool = False

    def __post_init__(self):
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise DomainError(f"Range ends must be finite, got {self.lo}:{self.hi}")
        if self.count < 1:
            raise DomainError(f"Range needs a positive point count, got {self.count}")
        if self.lo > self.hi:
            raise DomainError(f"Range needs lo <= hi, got {self.lo}:{self.hi}")
        if self.count == 1 and self.lo != self.hi:
            raise DomainError(f"A single-point range needs lo = hi, got {self.lo}:{self.hi}")
        if self.log and self.lo <= 0:
            raise DomainError(f"Log spacing needs a positive range, got {self.lo}:{self.hi}")

    def values(self) -> tuple[float, ...]:
        if self.count == 1:
            return (self.lo,)
        spaced = np.geomspace if self.log else np.linspace
        values = [float(v) for v in spaced(self.lo, self.hi, self.count)]
        # pin the ends against rounding in geomspace
        values[0], values[-1] = self.lo, self.hi
        return tuple(values)

    @classmethod
    def parse(cls, text: str, log: bool = False) -> 'AxisRange':
        """``lo:hi:count`` or a single value."""
        parts = text.split(":")
        try:
            if len(parts) == 1:
                value = float(parts[0])
                return cls(value, value, 1, log)
            if len(parts) == 3:
                return cls(float(parts[0]), float(parts[1]), int(parts[2]), log)
        except ValueError:
            pass
        raise DomainError(f"Range must be 'lo:hi:count' or a number, got '{text}'")


@dataclass(frozen=True)
class GridSpec:
    """
    Axes of a scan. Pairs come either from ``x`` (normalized, a + b = 2) or from ``a`` and ``b``.
    """
    p: Optional[AxisRange] = None
    q: Optional[AxisRange] = None
    x: Optional[AxisRange] = None
    a: Optional[AxisRange] = None
    b: Optional[AxisRange] = None

    def __post_init__(self):
        if self.x is not None and (self.a is not None or self.b is not None):
            raise DomainError("Give either an x range or a and b ranges, not both")
        if (self.a is None) != (self.b is None):
            raise DomainError("a and b ranges go together")

    def pairs(self) -> list[MeanInput]:
        if self.x is not None:
            return [MeanInput.normalized(x) for x in self.x.values() if 0.0 <= x < 1.0]
        if self.a is not None:
            return [MeanInput(a, b) for a, b in itertools.product(self.a.values(), self.b.values())]
        return []

    def missing_axes(self, domain: Domain) -> list[str]:
        """Axes ``domain`` needs that this grid does not give."""
        missing = []
        if domain.uses_p and self.p is None:
            missing.append("p")
        if domain.uses_q and self.q is None:
            missing.append("q")
        if domain.uses_x and self.x is None and self.a is None:
            missing.append("x")
        return missing

    def points(self, domain: Domain) -> list[ClaimPoint]:
        """Points of the grid inside ``domain``; axes the claim does not use are collapsed."""
        ps = self.p.values() if domain.uses_p and self.p else (None,)
        qs = self.q.values() if domain.uses_q and self.q else (None,)
        if domain.uses_x:
            pairs = self.pairs()
        else:
            pairs = [MeanInput.normalized(0.0)]

        points = []
        for p, q, pair in itertools.product(ps, qs, pairs):
            point = ClaimPoint(p=p, q=q, pair=pair)
            if domain.contains(point):
                points.append(point)
        return points


def _sort_value(value: Optional[float]) -> float:
    return -math.inf if value is None else value


def _order(report: ClaimReport) -> tuple:
    return (
        CLAIM_IDS.index(report.claim_id),
        _sort_value(report.p), _sort_value(report.q), _sort_value(report.x),
        _sort_value(report.a), _sort_value(report.b),
        position(report.claim_id, report.clause, report.variant),
    )


def sort_reports(reports: Iterable[ClaimReport]) -> list[ClaimReport]:
    return sorted(reports, key=_order)


def require_axes(claims: Iterable[InequalityClaim], grid: GridSpec):
    """:raises DomainError: when a claim needs an axis the grid does not give."""
    gaps: dict[str, list[str]] = {}
    for claim in claims:
        for axis in grid.missing_axes(claim.domain):
            ids = gaps.setdefault(axis, [])
            if claim.id not in ids:
                ids.append(claim.id)
    if gaps:
        raise DomainError("; ".join(f"no {axis} range given for {', '.join(ids)}" for axis, ids in gaps.items()))


def work_items(claims: Iterable[InequalityClaim], grid: GridSpec) -> list[dict]:
    items = []
    for claim in claims:
        for point in grid.points(claim.domain):
            items.append({"claim": claim.key, "point": point.as_dict()})
    return items


def scan(claims: Iterable[InequalityClaim], grid: GridSpec, tol: Optional[float] = None,
         chunk_size: Optional[int] = None) -> list[ClaimReport]:
    """
    Evaluate every claim at every grid point inside its domain.

    :param claims: Claims to run, usually from ``registry.select``.
    :param grid: Scan axes.
    :param tol: Status tolerance; PMEAN_TOL when omitted.
    :param chunk_size: Items per task; PMEAN_SCAN_CHUNK when omitted.
    :return: Reports ordered by claim id, then grid point, then clause.
    """
    tol = resolve_tolerance(tol)
    chunk_size = chunk_size or getattr(settings, "PMEAN_SCAN_CHUNK", DEFAULT_CHUNK)
    if chunk_size < 1:
        raise DomainError(f"Scan chunk size must be positive, got {chunk_size}")

    items = work_items(claims, grid)
    logger.info("Scanning %d claim points in chunks of %d", len(items), chunk_size)

    pending = [evaluate_chunk.delay(items[start:start + chunk_size], tol)
               for start in range(0, len(items), chunk_size)]
    reports = [ClaimReport(**row) for result in pending for row in result.get()]

    logger.info("Scan complete: %d reports", len(reports))
    return sort_reports(reports)
