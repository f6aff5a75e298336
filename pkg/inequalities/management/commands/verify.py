import io
import logging
from typing import IO, Optional

from django.core.management.base import BaseCommand, CommandError

from inequalities import registry
from inequalities.reports import VIOLATED, ClaimReport, summarize, write_csv, write_json
from inequalities.scan import AxisRange, GridSpec, require_axes, scan
from quadrature.exceptions import DomainError
from quadrature.formatting import format_number

logger = logging.getLogger(__name__)

FORMATS = ("table", "csv", "json")
SUMMARY_HEADER = (
    "claim", "variant", "points", "min_margin", "equalities", "violations", "errors", "strict_equalities",
)


def _axis(options: dict, name: str) -> Optional[AxisRange]:
    text = options.get(name)
    return None if text is None else AxisRange.parse(text, log=options["log"])


class Command(BaseCommand):
    help = "Checks the selected inequality claims over a parameter grid and reports signed margins"

    def add_arguments(self, parser):
        parser.add_argument("--claims", nargs="+", default=["all"],
                            help="claim ids or prefixes (T1, T2, C6, L3), 'all' or 'none'")
        parser.add_argument("--variant", choices=tuple(registry.VARIANT_FILTERS), default="all")
        parser.add_argument("--p", help="order range lo:hi:count or a single value")
        parser.add_argument("--q", help="second order range for claims comparing two orders")
        parser.add_argument("--x", help="normalized range (a - b) / (a + b), 0 < x < 1")
        parser.add_argument("--a", help="range of the larger input, used with --b instead of --x")
        parser.add_argument("--b", help="range of the smaller input")
        parser.add_argument("--log", action="store_true", help="geometric spacing for every range")
        parser.add_argument("--format", choices=FORMATS, default="table")
        parser.add_argument("--out", help="report file; the table format writes CSV there")
        parser.add_argument("--tol", type=float, help="status tolerance, overrides PMEAN_TOL")

    def _run(self, options: dict) -> list[ClaimReport]:
        claims = registry.select(options["claims"], options["variant"])
        logger.info("Verifying %d claim clauses", len(claims))
        grid = GridSpec(**{name: _axis(options, name) for name in ("p", "q", "x", "a", "b")})
        require_axes(claims, grid)
        return scan(claims, grid, tol=options["tol"])

    def _write_report(self, reports: list[ClaimReport], fmt: str, stream: IO[str]):
        if fmt == "json":
            write_json(reports, stream)
        else:
            write_csv(reports, stream)

    def _write_summary(self, reports: list[ClaimReport]):
        self.stdout.write("\t".join(SUMMARY_HEADER))
        for summary in summarize(reports):
            self.stdout.write("\t".join((
                summary.claim_id, summary.variant, str(summary.points), format_number(summary.min_margin),
                str(summary.equalities), str(summary.violations), str(summary.errors), str(summary.strict_equalities),
            )))
        for report in reports:
            if report.claim_id in registry.ROOT_CLAIM_IDS:
                self.stdout.write(f"{report.claim_id} {report.clause} p={format_number(report.p)} "
                                  f"q={format_number(report.q)} x={format_number(report.x)}")

    def handle(self, *args, **options):
        try:
            reports = self._run(options)
        except (DomainError, ValueError) as e:
            raise CommandError(str(e), returncode=2)

        fmt, out = options["format"], options["out"]
        if out:
            with open(out, "w", newline="", encoding="utf-8") as f:
                self._write_report(reports, fmt, f)
        if fmt == "table" or out:
            self._write_summary(reports)
        else:
            buffer = io.StringIO()
            self._write_report(reports, fmt, buffer)
            self.stdout.write(buffer.getvalue(), ending="")

        governing = sum(r.status == VIOLATED and r.governs_exit for r in reports)
        printed = sum(r.status == VIOLATED and not r.governs_exit for r in reports)
        strict = sum(r.strict_equality for r in reports)
        if strict:
            self.stderr.write(f"warning: {strict} equalities on strict clauses away from x -> 0")
        if printed:
            self.stderr.write(f"warning: {printed} violations of as-printed forms")
        if governing:
            raise CommandError(f"{governing} violations of as-derived or common claims", returncode=1)
