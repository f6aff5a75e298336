import math
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from ptrig.constants import constants
from quadrature.formatting import format_number


def _run(*args) -> str:
    out = StringIO()
    call_command(*args, stdout=out)
    return out.getvalue()


class EvalCommandTests(SimpleTestCase):

    def test_arcsin(self):
        self.assertEqual(_run("eval", "arcsin_p", "--p", "2", "--x", "0.5").strip(), "0.523598775598299")

    def test_gamma(self):
        """
        Gamma(1/2) = sqrt(pi)
        """
        self.assertEqual(_run("eval", "gamma", "--x", "0.5").strip(), "1.77245385090552")

    def test_arctan_matches_constant(self):
        value = _run("eval", "arctan_p", "--p", "3", "--x", "1").strip()
        self.assertAlmostEqual(float(value), constants(3).b_p, delta=1e-14)

    def test_oracle(self):
        lines = _run("eval", "sin_p", "--p", "3", "--x", "0.8", "--oracle").splitlines()
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("oracle "))
        self.assertLess(float(lines[2].split()[1]), 1e-9)

    def test_oracle_near_one(self):
        lines = _run("eval", "arcsin_p", "--p", "3", "--x", "0.999999999", "--oracle").splitlines()
        self.assertEqual(len(lines), 3)
        self.assertLess(float(lines[2].split()[1]), 1e-10)

    def test_missing_argument(self):
        with self.assertRaises(CommandError) as e:
            _run("eval", "beta", "--x", "0.5")
        self.assertEqual(e.exception.returncode, 2)

    def test_domain_error(self):
        with self.assertRaises(CommandError) as e:
            _run("eval", "arcsin_p", "--p", "2", "--x", "1.5")
        self.assertEqual(e.exception.returncode, 2)


class ConstCommandTests(SimpleTestCase):

    def test_p2(self):
        lines = dict(line.split(" ", 1) for line in _run("const", "--p", "2").splitlines())
        self.assertEqual(lines["pi_p"], format_number(math.pi))
        self.assertAlmostEqual(float(lines["b_p"]), math.pi / 4, delta=1e-14)
        self.assertAlmostEqual(float(lines["c_p"]), math.log(1 + math.sqrt(2)), delta=1e-14)
        for name in ("pi_residual", "b_residual", "c_residual"):
            self.assertLessEqual(float(lines[name]), 1e-12, msg=name)

    def test_p4(self):
        lines = dict(line.split(" ", 1) for line in _run("const", "--p", "4").splitlines())
        self.assertAlmostEqual(float(lines["pi_p"]), 2.221441469080, delta=1e-12)
        self.assertAlmostEqual(float(lines["a_p"]), 0.5 * float(lines["pi_p"]), delta=1e-14)

    def test_invalid_order(self):
        with self.assertRaises(CommandError) as e:
            _run("const", "--p", "1.0")
        self.assertEqual(e.exception.returncode, 2)
