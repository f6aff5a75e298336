import math

from django.test import SimpleTestCase

from quadrature.exceptions import DomainError
from special.hypergeometric import HypergeometricArgs, hyp2f1, hyp2f1_integral, hyp2f1_series


class Hyp2f1Tests(SimpleTestCase):

    def test_zero_argument(self):
        """
        The empty sum at z = 0 is 1
        """
        self.assertEqual(hyp2f1(HypergeometricArgs(0.3, 1.7, 2.2, 0.0)), 1.0)

    def test_logarithm_identity(self):
        """
        F(1, 1; 2; z) = -ln(1 - z) / z on both sides of z = 1/2 and for negative z
        """
        for z in (0.3, 0.75, 0.99, -0.4, -5.0):
            expected = -math.log1p(-z) / z
            self.assertAlmostEqual(hyp2f1(HypergeometricArgs(1, 1, 2, z)), expected, delta=1e-12 * abs(expected),
                                   msg=f"z={z}")
        self.assertAlmostEqual(hyp2f1(HypergeometricArgs(1, 1, 2, 0.3)), 1.1889164797, delta=1e-10)

    def test_arcsine_identity(self):
        """
        F(1/2, 1/2; 3/2; x^2) = arcsin(x) / x
        """
        self.assertAlmostEqual(hyp2f1(HypergeometricArgs(0.5, 0.5, 1.5, 0.25)), math.pi / 3, delta=1e-12)
        for x in (0.8, 0.95, 0.999):
            expected = math.asin(x) / x
            self.assertAlmostEqual(hyp2f1(HypergeometricArgs(0.5, 0.5, 1.5, x * x)), expected,
                                   delta=1e-12 * expected, msg=f"x={x}")

    def test_binomial_identity(self):
        """
        F(a, b; b; z) = (1 - z)^-a, including z > 1/2 where the Gauss connection is used
        """
        for z in (0.2, 0.6, 0.9, -2.0):
            expected = (1 - z) ** -0.3
            self.assertAlmostEqual(hyp2f1(HypergeometricArgs(0.3, 1.25, 1.25, z)), expected,
                                   delta=1e-12 * expected, msg=f"z={z}")

    def test_arctanh_identity(self):
        """
        F(1, 1/2; 3/2; z) = arctanh(sqrt z) / sqrt z, the logarithmic connection case
        """
        for z in (0.25, 0.7, 0.98):
            expected = math.atanh(math.sqrt(z)) / math.sqrt(z)
            self.assertAlmostEqual(hyp2f1(HypergeometricArgs(1, 0.5, 1.5, z)), expected,
                                   delta=1e-12 * expected, msg=f"z={z}")

    def test_supplied_complement(self):
        """
        An exact 1 - z keeps the digits the float z cannot hold
        """
        w = 1e-12
        expected = -math.log(w) / (1.0 - w)
        self.assertAlmostEqual(hyp2f1(HypergeometricArgs(1, 1, 2, 1.0 - w, one_minus_z=w)), expected,
                               delta=1e-12 * expected)
        x = 1.0 - 1e-10
        expected = math.asin(x) / x
        args = HypergeometricArgs(0.5, 0.5, 1.5, x * x, one_minus_z=-math.expm1(2 * math.log(x)))
        self.assertAlmostEqual(hyp2f1(args), expected, delta=1e-12 * expected)
        with self.assertRaises(DomainError):
            HypergeometricArgs(1, 1, 2, 0.5, one_minus_z=0.0)

    def test_integer_gap(self):
        """
        F(1, 1; 3; z) = 2 ((1 - z) ln(1 - z) + z) / z^2, gap c - a - b = 1
        """
        z = 0.8
        expected = 2 * ((1 - z) * math.log(1 - z) + z) / z ** 2
        self.assertAlmostEqual(hyp2f1(HypergeometricArgs(1, 1, 3, z)), expected, delta=1e-12 * expected)

    def test_polynomial_case(self):
        """
        A non-positive integer a terminates the series: F(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        """
        b, c, z = 0.7, 1.9, 0.85
        expected = 1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1))
        self.assertAlmostEqual(hyp2f1(HypergeometricArgs(-2, b, c, z)), expected, delta=1e-14)

    def test_series_and_integral_agree(self):
        """
        Evaluator and Euler integral agree for the parameter sets the arc functions use
        """
        for p in range(2, 11):
            for a in (1 / p, 1.0):
                for z in (0.0, 0.2, 0.5, 0.75, 0.95):
                    args = HypergeometricArgs(a, 1 / p, 1 + 1 / p, z)
                    self.assertAlmostEqual(hyp2f1(args), hyp2f1_integral(args), delta=1e-10,
                                           msg=f"p={p} a={a} z={z}")

    def test_raw_series(self):
        """
        The bare series agrees with the evaluator inside its disc
        """
        args = HypergeometricArgs(1 / 3, 1 / 3, 4 / 3, 0.4)
        self.assertAlmostEqual(hyp2f1_series(args), hyp2f1(args), delta=1e-15)
        with self.assertRaises(DomainError):
            hyp2f1_series(HypergeometricArgs(1, 1, 2, -1.5))

    def test_domain(self):
        """
        z >= 1 and non-positive integer c are rejected
        """
        with self.assertRaises(DomainError):
            hyp2f1(HypergeometricArgs(1, 1, 2, 1.0))
        with self.assertRaises(DomainError):
            HypergeometricArgs(1, 1, -2, 0.5)
        with self.assertRaises(DomainError):
            hyp2f1_integral(HypergeometricArgs(1, 2, 1.5, 0.5))
