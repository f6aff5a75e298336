import math

from django.test import SimpleTestCase

from quadrature.exceptions import DomainError, NoSignChange, NonConvergence
from quadrature.roots import RootBracket, find_root


class FindRootTests(SimpleTestCase):

    def test_linear(self):
        """
        x - 0.5 on [0, 1] has its root at 0.5
        """
        f = lambda x: x - 0.5
        self.assertAlmostEqual(find_root(f, RootBracket.around(f, 0.0, 1.0)), 0.5, delta=1e-15)

    def test_quartic_closed_form(self):
        """
        x^4 + 2x^2 - 1 vanishes at sqrt(sqrt(2) - 1)
        """
        f = lambda x: x ** 4 + 2 * x ** 2 - 1
        root = find_root(f, RootBracket.around(f, 0.0, 1.0))
        self.assertAlmostEqual(root, math.sqrt(math.sqrt(2) - 1), delta=1e-14)
        self.assertAlmostEqual(root, 0.6435942530, delta=1e-10)

    def test_fixed_point_of_cosine(self):
        """
        cos(x) - x has the Dottie number as its root
        """
        f = lambda x: math.cos(x) - x
        root = find_root(f, RootBracket.around(f, 0.0, 1.0))
        self.assertAlmostEqual(root, 0.7390851332, delta=1e-10)

    def test_containment_and_residual(self):
        """
        The root lies in the bracket and meets the residual tolerance for a family of cubics
        """
        for shift in (0.01, 0.2, 0.5, 0.77, 0.99):
            f = lambda x, s=shift: x ** 3 - s
            bracket = RootBracket.around(f, 0.0, 1.0)
            root = find_root(f, bracket, tol=1e-12)
            self.assertTrue(bracket.lo <= root <= bracket.hi, "Root must stay inside its bracket")
            self.assertLessEqual(abs(f(root)), 1e-12)

    def test_no_sign_change(self):
        """
        A bracket without a sign change is rejected
        """
        f = lambda x: x * x + 1
        with self.assertRaises(NoSignChange):
            RootBracket.around(f, -1.0, 1.0)
        with self.assertRaises(DomainError):
            RootBracket(lo=1.0, hi=0.0, f_lo=-1.0, f_hi=1.0)

    def test_unreachable_tolerance(self):
        """
        A jump without a zero cannot meet any residual target; the best iterate sits at the jump
        """
        f = lambda x: -1.0 if x < 0.3 else 1.0
        with self.assertRaises(NonConvergence) as caught:
            find_root(f, RootBracket.around(f, 0.0, 1.0), tol=1e-12)
        self.assertAlmostEqual(caught.exception.best, 0.3, delta=1e-15)
