import io

from django.test import SimpleTestCase, override_settings

from inequalities import registry
from inequalities.reports import VIOLATED, write_csv
from inequalities.scan import AxisRange, GridSpec, require_axes, scan
from inequalities.tasks import evaluate_chunk
from quadrature.exceptions import DomainError
from .build_grid_data import Build


class AxisRangeTests(SimpleTestCase):

    def test_parse(self):
        self.assertEqual(AxisRange.parse("2:10:9").values(), tuple(float(p) for p in range(2, 11)))
        self.assertEqual(AxisRange.parse("0.5").values(), (0.5,))
        values = AxisRange.parse("1:100:3", log=True).values()
        self.assertEqual(values[0], 1.0)
        self.assertAlmostEqual(values[1], 10.0, delta=1e-12)
        self.assertEqual(values[2], 100.0)

    def test_invalid(self):
        for text in ("2:1:3", "1:2", "a:b:c", "1:2:0", "nan"):
            with self.assertRaises(DomainError, msg=text):
                AxisRange.parse(text)
        with self.assertRaises(DomainError):
            AxisRange.parse("0:1:3", log=True)

    def test_exclusive_pairs(self):
        with self.assertRaises(DomainError):
            GridSpec(x=AxisRange(0.5, 0.5, 1), a=AxisRange(2, 2, 1), b=AxisRange(1, 1, 1))
        with self.assertRaises(DomainError):
            GridSpec(a=AxisRange(2, 2, 1))


class GridTests(SimpleTestCase):

    def test_points_follow_domain(self):
        grid = GridSpec(p=AxisRange(1.5, 3.0, 4), x=AxisRange(0.0, 0.9, 4))
        chain = registry.select(["T1"])[0]
        points = grid.points(chain.domain)
        # p = 1.5 and x = 0 fall outside
        self.assertEqual(len(points), 3 * 3)
        self.assertTrue(all(point.q is None for point in points))

    def test_missing_axis(self):
        ratio = registry.select(["T2c"])[0]
        self.assertEqual(Build.small_grid().points(ratio.domain), [], "claims on two orders need a q axis")

    def test_required_axes(self):
        ratio = registry.select(["T2c"])[0]
        self.assertEqual(Build.small_grid().missing_axes(ratio.domain), ["q"])
        self.assertEqual(GridSpec().missing_axes(ratio.domain), ["p", "q", "x"])
        require_axes(registry.select(["T1", "T6"]), Build.small_grid())
        require_axes(registry.select(["T2b"]), GridSpec(p=AxisRange(2, 2, 1), q=AxisRange(4, 4, 1)))
        with self.assertRaises(DomainError):
            require_axes(registry.select(["T1", "T2c"]), Build.small_grid())

    def test_pair_grid(self):
        grid = GridSpec(p=AxisRange(2, 2, 1), a=AxisRange(2, 4, 3), b=AxisRange(1, 1, 1))
        chain = registry.select(["T1"])[0]
        xs = [point.x for point in grid.points(chain.domain)]
        self.assertEqual(len(xs), 3)
        for x, expected in zip(xs, (1 / 3, 0.5, 0.6)):
            self.assertAlmostEqual(x, expected, delta=1e-15)


class ScanTests(SimpleTestCase):

    def test_empty(self):
        self.assertEqual(scan(registry.select(["none"]), Build.small_grid()), [])
        self.assertEqual(scan(registry.select(["T1"]), GridSpec()), [])

    def test_chain(self):
        """
        T1 on a 3 x 5 grid: 90 reports, none violated, ordered by p then x
        """
        reports = scan(registry.select(["T1"]), Build.small_grid())
        self.assertEqual(len(reports), 90)
        self.assertFalse(any(r.status == VIOLATED for r in reports))
        keys = [(r.p, r.x) for r in reports]
        self.assertEqual(keys, sorted(keys))
        self.assertEqual([r.clause for r in reports[:6]], [c.clause for c in registry.select(["T1"])])

    @override_settings(PMEAN_SCAN_CHUNK=7)
    def test_chunking_is_invisible(self):
        """
        The report does not depend on how the work is split
        """
        claims = registry.select(["T1", "T6"])
        chunked = io.StringIO()
        write_csv(scan(claims, Build.small_grid()), chunked)
        whole = io.StringIO()
        write_csv(scan(claims, Build.small_grid(), chunk_size=1000), whole)
        self.assertEqual(chunked.getvalue(), whole.getvalue())

    def test_roots(self):
        """
        T2b solves for x and reports it
        """
        grid = GridSpec(p=AxisRange(2, 2, 1), q=AxisRange(4, 4, 1))
        reports = scan(registry.select(["T2b"]), grid)
        self.assertEqual(len(reports), 3)
        self.assertAlmostEqual(reports[0].x, 0.643594252906, delta=1e-12)
        self.assertFalse(any(r.status == VIOLATED for r in reports))

    def test_task(self):
        claim = registry.select(["T1"])[0]
        point = Build.points(2.0)[3]
        rows = evaluate_chunk([{"claim": claim.key, "point": point.as_dict()}], 1e-12)
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]["claim_id"], "T1")

    def test_unknown_claim(self):
        with self.assertRaises(DomainError):
            registry.select(["T99"])
        with self.assertRaises(DomainError):
            registry.select(["all"], variant="printed")
