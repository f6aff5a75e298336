import json
import os
import tempfile
from dataclasses import replace
from io import StringIO
from unittest.mock import patch

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from inequalities.reports import EQUALITY, VIOLATED, read_csv
from .build_grid_data import Build


class VerifyCommandTests(SimpleTestCase):

    def setUp(self):
        self.out = StringIO()
        self.err = StringIO()

    def _verify(self, *args):
        call_command("verify", *args, stdout=self.out, stderr=self.err)
        return self.out.getvalue()

    def test_chain_scan(self):
        """
        The full chain scan has no violations and exits normally
        """
        output = self._verify("--claims", "T1", "--p", "2:10:9", "--x", "0.01:0.99:99")
        lines = output.splitlines()
        self.assertEqual(lines[0].split("\t")[0], "claim")
        row = lines[1].split("\t")
        self.assertEqual(row[:3], ["T1", "common", str(9 * 99 * 6)])
        self.assertEqual(row[5], "0", "no violations expected")

    def test_roots(self):
        output = self._verify("--claims", "T2b", "--p", "2", "--q", "4")
        self.assertIn("T2b u2(x0)=0 p=2 q=4 x=0.6435942529", output)

    def test_none(self):
        output = self._verify("--claims", "none", "--format", "csv")
        self.assertEqual(output.strip(), "claim_id,clause,variant,p,q,a,b,x,lhs,rhs,margin,status")

    def test_printed_only_violations(self):
        """
        As-printed violations are reported on stderr without failing the run
        """
        self._verify("--claims", "T7", "--variant", "as-printed", "--p", "3", "--x", "0.5")
        self.assertIn("as-printed", self.err.getvalue())

    def test_governing_violation(self):
        violated = Build.report(margin=-0.5, status=VIOLATED)
        with patch("inequalities.management.commands.verify.scan", return_value=[violated]):
            with self.assertRaises(CommandError) as e:
                self._verify("--claims", "T1", "--p", "2", "--x", "0.5")
        self.assertEqual(e.exception.returncode, 1)

    def test_strict_equalities_warn(self):
        flagged = replace(Build.report(margin=0.0, status=EQUALITY), strict_equality=True)
        with patch("inequalities.management.commands.verify.scan", return_value=[flagged]):
            output = self._verify("--claims", "T1", "--p", "2", "--x", "0.5")
        self.assertEqual(output.splitlines()[0].split("\t")[-1], "strict_equalities")
        self.assertEqual(output.splitlines()[1].split("\t")[-1], "1")
        self.assertIn("strict clauses", self.err.getvalue())

    def test_config_errors(self):
        cases = (
            ("--claims", "T99"), ("--p", "3:2:4"), ("--x", "0.5", "--a", "2", "--b", "1"),
            ("--claims", "T1", "--p", "2", "--x", "0.5", "--tol", "-1"),
            ("--claims", "T1", "--p", "2"), ("--claims", "T1", "--x", "0.5"),
            ("--claims", "T2", "--p", "2", "--x", "0.5"), ("--p", "2", "--x", "0.5"),
        )
        for args in cases:
            with self.assertRaises(CommandError, msg=str(args)) as e:
                self._verify(*args)
            self.assertEqual(e.exception.returncode, 2, msg=str(args))

    def test_missing_axis_is_named(self):
        with self.assertRaises(CommandError) as e:
            self._verify("--claims", "T2", "--p", "2", "--x", "0.5")
        self.assertIn("no q range", str(e.exception))
        self.assertIn("T2a", str(e.exception))

    def test_json_output(self):
        output = self._verify("--claims", "T6", "--p", "2", "--x", "0.25:0.75:3", "--format", "json")
        rows = json.loads(output)
        self.assertEqual(len(rows), 12)
        self.assertEqual(rows[0]["claim_id"], "T6")

    def test_report_file(self):
        """
        Two identical runs write byte-identical reports
        """
        args = ("--claims", "T1", "T8", "--p", "2:3:2", "--x", "0.2:0.8:4")
        with tempfile.TemporaryDirectory() as directory:
            first, second = os.path.join(directory, "a.csv"), os.path.join(directory, "b.csv")
            self._verify(*args, "--out", first)
            self._verify(*args, "--out", second)
            with open(first, encoding="utf-8") as f:
                text = f.read()
            with open(second, encoding="utf-8") as f:
                self.assertEqual(text, f.read())
            with open(first, encoding="utf-8") as f:
                self.assertEqual(len(read_csv(f)), 2 * 4 * (6 + 8))


class X0CommandTests(SimpleTestCase):

    def test_p2_q4(self):
        out = StringIO()
        call_command("x0", "--p", "2", "--q", "4", stdout=out)
        value, residual = out.getvalue().splitlines()
        self.assertTrue(value.startswith("0.643594252905"), msg=value)
        self.assertTrue(residual.startswith("residual "))
        self.assertLessEqual(float(residual.split()[1]), 1e-12)

    def test_p2_q3(self):
        out = StringIO()
        call_command("x0", "--p", "2", "--q", "3", stdout=out)
        self.assertAlmostEqual(float(out.getvalue().splitlines()[0]), 0.596071637983, delta=1e-11)

    def test_reversed_orders(self):
        with self.assertRaises(CommandError) as e:
            call_command("x0", "--p", "4", "--q", "2", stdout=StringIO())
        self.assertEqual(e.exception.returncode, 2)
