import math
from unittest.mock import patch

from django.test import SimpleTestCase

from ptrig.functions import (
    PExponent, arccos_p, arccosh_p, arccosh_p_quadrature, arccos_p_quadrature, arcsin_p,
    arcsin_p_complement_integral, arcsin_p_complement_quadrature, arcsin_p_quadrature, arcsinh_p,
    arcsinh_p_quadrature, arctan_p, arctan_p_quadrature, arctanh_p, arctanh_p_quadrature, j_p, j_p_quadrature,
    pi_p, sin_p, sin_p_quadrature,
)
from quadrature.exceptions import DomainError, NonConvergence

ARC_PATHS = {
    "arcsin_p": (arcsin_p, arcsin_p_quadrature),
    "arctan_p": (arctan_p, arctan_p_quadrature),
    "arcsinh_p": (arcsinh_p, arcsinh_p_quadrature),
    "arctanh_p": (arctanh_p, arctanh_p_quadrature),
}


class ClassicalReductionTests(SimpleTestCase):
    def setUp(self):
        self.xs = [i / 100 for i in range(1, 100)]

    def test_reference_values(self):
        """
        Classical values at p = 2
        """
        self.assertAlmostEqual(arcsin_p(2, 0.5), math.pi / 6, delta=1e-15)
        self.assertAlmostEqual(arccos_p(2, 0.5), math.pi / 3, delta=1e-14)
        self.assertAlmostEqual(arctan_p(2, 1.0), math.pi / 4, delta=1e-15)
        self.assertAlmostEqual(arcsinh_p(2, 1.0), math.log(1 + math.sqrt(2)), delta=1e-15)
        self.assertAlmostEqual(arctanh_p(2, 0.5), 0.5 * math.log(3), delta=1e-15)
        self.assertAlmostEqual(arccosh_p(2, 2.0), math.log(2 + math.sqrt(3)), delta=1e-14)

    def test_grid(self):
        """
        All four functions match the classical ones on x = 0.01, ..., 0.99
        """
        classical = {"arcsin_p": math.asin, "arctan_p": math.atan, "arcsinh_p": math.asinh, "arctanh_p": math.atanh}
        for name, reference in classical.items():
            evaluate = ARC_PATHS[name][0]
            for x in self.xs:
                expected = reference(x)
                self.assertAlmostEqual(evaluate(2, x), expected, delta=1e-12 * max(1.0, expected),
                                       msg=f"{name}({x})")

    def test_trivial_points(self):
        """
        Zeros of every function and the special values at 1
        """
        for p in (1.5, 2.0, 7.0):
            self.assertEqual(arcsin_p(p, 0.0), 0.0)
            self.assertEqual(arctan_p(p, 0.0), 0.0)
            self.assertEqual(arcsinh_p(p, 0.0), 0.0)
            self.assertEqual(arctanh_p(p, 0.0), 0.0)
            self.assertEqual(arccos_p(p, 1.0), 0.0)
            self.assertEqual(arccosh_p(p, 1.0), 0.0)
            self.assertEqual(arcsin_p(p, 1.0), 0.5 * pi_p(p))
            self.assertEqual(arccos_p(p, 0.0), 0.5 * pi_p(p))


class DualPathTests(SimpleTestCase):

    def test_hypergeometric_matches_quadrature(self):
        """
        Hypergeometric form and adaptive quadrature agree on p = 2..10, x = 0.05..0.95
        """
        for p in range(2, 11):
            for i in range(1, 20):
                x = i * 0.05
                for name, (closed, oracle) in ARC_PATHS.items():
                    self.assertAlmostEqual(closed(p, x), oracle(p, x), delta=1e-10, msg=f"{name} p={p} x={x}")

    def test_derived_examples(self):
        """
        Spot values off the classical line, each against its defining integral
        """
        self.assertAlmostEqual(arcsin_p(4, 0.9), arcsin_p_quadrature(4, 0.9), delta=1e-10)
        self.assertAlmostEqual(arccos_p(3, 0.7), arccos_p_quadrature(3, 0.7), delta=1e-10)
        self.assertAlmostEqual(arccos_p(3, 0.7), arcsin_p(3, (1 - 0.343) ** (1 / 3)), delta=1e-15)
        self.assertAlmostEqual(arctan_p(3, 0.8), arctan_p_quadrature(3, 0.8), delta=1e-10)
        self.assertAlmostEqual(arcsinh_p(5, 0.6), arcsinh_p_quadrature(5, 0.6), delta=1e-10)
        self.assertAlmostEqual(arctanh_p(4, 0.9), arctanh_p_quadrature(4, 0.9), delta=1e-10)
        self.assertAlmostEqual(arccosh_p(3, 1.5), arccosh_p_quadrature(3, 1.5), delta=1e-10)

    def test_near_one(self):
        """
        Both paths agree within 1e-9 and 1e-12 of x = 1, where the integrands are nearly singular
        """
        for p in (1.2, 2.0, 3.0, 7.0):
            for gap in (1e-9, 1e-12):
                x = 1.0 - gap
                self.assertAlmostEqual(arcsin_p(p, x), arcsin_p_quadrature(p, x), delta=1e-10, msg=f"p={p} x={x}")
                self.assertAlmostEqual(arctanh_p(p, x), arctanh_p_quadrature(p, x), delta=1e-10, msg=f"p={p} x={x}")
        x = 1.0 - 1e-9
        self.assertAlmostEqual(arcsin_p(2, x), math.asin(x), delta=1e-12)
        self.assertAlmostEqual(arctanh_p(2, x), math.atanh(x), delta=1e-12)
        self.assertAlmostEqual(arctanh_p_quadrature(2, x), math.atanh(x), delta=1e-11)
        self.assertAlmostEqual(arccos_p(3, 1e-4), arccos_p_quadrature(3, 1e-4), delta=1e-10)

    def test_beyond_one(self):
        """
        arctan_p and arcsinh_p past x = 1, where the hypergeometric argument exceeds 1/2
        """
        for p in (2.0, 3.0, 6.0):
            for x in (1.5, 4.0, 20.0):
                self.assertAlmostEqual(arctan_p(p, x), arctan_p_quadrature(p, x), delta=1e-10)
                self.assertAlmostEqual(arcsinh_p(p, x), arcsinh_p_quadrature(p, x), delta=1e-10)
        self.assertAlmostEqual(arctan_p(2, 20.0), math.atan(20.0), delta=1e-13)

    def test_auxiliary_integrals(self):
        """
        j_p and the complementary arcsin integral against quadrature
        """
        for p in (2.0, 3.0, 5.0):
            for x in (0.2, 0.6, 0.95):
                self.assertAlmostEqual(j_p(p, x), j_p_quadrature(p, x), delta=1e-10)
                self.assertAlmostEqual(arcsin_p_complement_integral(p, x), arcsin_p_complement_quadrature(p, x),
                                       delta=1e-10)
        # a quarter of the unit disc
        self.assertAlmostEqual(arcsin_p_complement_integral(2, 1.0), math.pi / 4, delta=1e-13)


class OrderingAndMonotonicityTests(SimpleTestCase):

    def test_ordering(self):
        """
        arctan_p < arcsinh_p < arcsin_p < arctanh_p; at tiny x and large p the gaps drop below float resolution
        """
        for p in range(2, 11):
            for i in range(1, 100):
                x = i / 100
                values = [arctan_p(p, x), arcsinh_p(p, x), arcsin_p(p, x), arctanh_p(p, x)]
                for left, right in zip(values, values[1:]):
                    if x >= 0.1:
                        self.assertLess(left, right, f"p={p} x={x}")
                    else:
                        self.assertLessEqual(left, right, f"p={p} x={x}")

    def test_parameter_monotonicity(self):
        """
        In p: arcsin_p and arctanh_p decrease, arctan_p and arcsinh_p increase
        """
        ps = [2 + 0.5 * i for i in range(17)]
        for x in (0.3, 0.6, 0.9):
            for name, direction in (("arcsin_p", -1), ("arctanh_p", -1), ("arctan_p", 1), ("arcsinh_p", 1)):
                evaluate = ARC_PATHS[name][0]
                values = [evaluate(p, x) for p in ps]
                for left, right in zip(values, values[1:]):
                    self.assertGreater(direction * (right - left), 0, f"{name} x={x}")

    def test_log_convexity(self):
        """
        f((p+q)/2)^2 <= f(p) f(q) for arcsin_p and arctanh_p
        """
        for evaluate in (arcsin_p, arctanh_p):
            for p, q in ((2, 4), (3, 7), (2.5, 10)):
                for x in (0.5, 0.9):
                    mid = evaluate((p + q) / 2, x)
                    self.assertLessEqual(mid * mid, evaluate(p, x) * evaluate(q, x) * (1 + 1e-14))

    def test_geometric_convexity(self):
        """
        arcsin_sqrt(pq)(x) <= sqrt(arcsin_p(x) arcsin_q(x))
        """
        for p, q in ((2, 4), (3, 7), (2.5, 10)):
            for x in (0.5, 0.9, 0.99):
                self.assertLessEqual(arcsin_p(math.sqrt(p * q), x),
                                     math.sqrt(arcsin_p(p, x) * arcsin_p(q, x)) * (1 + 1e-14))


class SinPTests(SimpleTestCase):

    def test_reference_values(self):
        """
        sin_p(0) = 0 and sin_2 is the classical sine
        """
        self.assertEqual(sin_p(3, 0.0), 0.0)
        self.assertAlmostEqual(sin_p(2, math.pi / 2), 1.0, delta=1e-15)
        for theta in (0.3, 1.2, 2.5, 4.0, -0.8, 10.0):
            self.assertAlmostEqual(sin_p(2, theta), math.sin(theta), delta=1e-11, msg=f"theta={theta}")

    def test_round_trip(self):
        """
        arcsin_p(sin_p(theta)) = theta on (0, pi_p / 2)
        """
        for p in (2, 3, 5):
            half = 0.5 * pi_p(p)
            for i in range(1, 40):
                theta = half * i / 40
                self.assertAlmostEqual(arcsin_p(p, sin_p(p, theta)), theta, delta=1e-10, msg=f"p={p}")
        self.assertAlmostEqual(arcsin_p(3, sin_p(3, 0.7)), 0.7, delta=1e-11)

    def test_symmetries(self):
        """
        Reflection about pi_p / 2, oddness and period 2 pi_p
        """
        p = 3
        period = pi_p(p)
        for theta in (0.2, 0.9, 1.5):
            self.assertAlmostEqual(sin_p(p, period - theta), sin_p(p, theta), delta=1e-13)
            self.assertAlmostEqual(sin_p(p, -theta), -sin_p(p, theta), delta=1e-13)
            self.assertAlmostEqual(sin_p(p, theta + 2 * period), sin_p(p, theta), delta=1e-12)
            self.assertAlmostEqual(sin_p(p, theta + period), -sin_p(p, theta), delta=1e-12)
        self.assertEqual(sin_p(p, 0.5 * period), 1.0)

    def test_quadrature_inverse(self):
        """
        Inverting the integral directly gives the same sin_p
        """
        for p in (2.5, 4):
            for theta in (0.1, 0.6, 1.0, -0.4):
                self.assertAlmostEqual(sin_p_quadrature(p, theta), sin_p(p, theta), delta=1e-9,
                                       msg=f"p={p} theta={theta}")

    def test_stalled_inverse_warns(self):
        stalled = NonConvergence("stalled", best=0.5, error=1e-9)
        with patch("ptrig.functions.find_root", side_effect=stalled):
            with self.assertLogs("ptrig.functions", level="WARNING"):
                self.assertEqual(sin_p(3, 0.4), 0.5)


class DomainTests(SimpleTestCase):

    def test_exponent(self):
        """
        p must exceed 1
        """
        for p in (1.0, 0.5, -3.0, math.inf):
            with self.assertRaises(DomainError):
                PExponent(p)
        with self.assertRaises(DomainError):
            arcsin_p(1.0, 0.5)

    def test_arguments(self):
        """
        Each function rejects arguments outside its domain
        """
        with self.assertRaises(DomainError):
            arcsin_p(3, 1.2)
        with self.assertRaises(DomainError):
            arccos_p(3, -0.1)
        with self.assertRaises(DomainError):
            arctan_p(3, -1.0)
        with self.assertRaises(DomainError):
            arcsinh_p(3, -1.0)
        with self.assertRaises(DomainError):
            arctanh_p(3, 1.0)
        with self.assertRaises(DomainError):
            arccosh_p(3, 0.5)
