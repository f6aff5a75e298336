import logging
import math

from django.core.management.base import BaseCommand, CommandError

from ptrig import functions as pt
from quadrature.exceptions import DomainError, NumericsError
from quadrature.formatting import format_number
from quadrature.integrals import Integrand, integrate, integrate_semi_infinite
from special import functions as sf
from special.hypergeometric import HypergeometricArgs, hyp2f1, hyp2f1_integral

logger = logging.getLogger(__name__)

EULER_GAMMA = 0.5772156649015329

ARC_FUNCTIONS = {
    "arcsin_p": (pt.arcsin_p, pt.arcsin_p_quadrature),
    "arccos_p": (pt.arccos_p, pt.arccos_p_quadrature),
    "arctan_p": (pt.arctan_p, pt.arctan_p_quadrature),
    "arcsinh_p": (pt.arcsinh_p, pt.arcsinh_p_quadrature),
    "arctanh_p": (pt.arctanh_p, pt.arctanh_p_quadrature),
    "arccosh_p": (pt.arccosh_p, pt.arccosh_p_quadrature),
}
FUNCTIONS = (*ARC_FUNCTIONS, "sin_p", "hyp2f1", "gamma", "digamma", "beta")


def _require(options: dict, *names: str):
    missing = [f"--{name}" for name in names if options.get(name) is None]
    if missing:
        raise CommandError(f"{options['function']} needs {', '.join(missing)}", returncode=2)


def _gamma_integral(x: float) -> float:
    f = Integrand(lambda t: math.exp(-t) * t ** (x - 1.0), lo_singularity=max(0.0, 1.0 - x))
    return integrate_semi_infinite(f).value


def _digamma_integral(x: float) -> float:
    f = Integrand(lambda t: (1.0 - t ** (x - 1.0)) / (1.0 - t), lo_singularity=max(0.0, 1.0 - x))
    return -EULER_GAMMA + integrate(f, 0.0, 1.0).value


def _beta_integral(x: float, y: float) -> float:
    f = Integrand(lambda t: t ** (x - 1.0) * (1.0 - t) ** (y - 1.0),
                  lo_singularity=max(0.0, 1.0 - x), hi_singularity=max(0.0, 1.0 - y),
                  reflected=lambda d: (1.0 - d) ** (x - 1.0) * d ** (y - 1.0))
    return integrate(f, 0.0, 1.0).value


class Command(BaseCommand):
    help = "Evaluates a generalized trigonometric or classical special function"

    def add_arguments(self, parser):
        parser.add_argument("function", choices=FUNCTIONS)
        parser.add_argument("--p", type=float)
        parser.add_argument("--x", type=float, help="argument; the angle for sin_p, t for arccosh_p")
        parser.add_argument("--y", type=float, help="second argument of beta")
        parser.add_argument("--a", type=float)
        parser.add_argument("--b", type=float)
        parser.add_argument("--c", type=float)
        parser.add_argument("--z", type=float)
        parser.add_argument("--oracle", action="store_true",
                            help="also print the quadrature cross-check and the discrepancy")

    def _evaluate(self, options: dict) -> tuple[float, float | None]:
        name = options["function"]
        oracle = options["oracle"]

        if name in ARC_FUNCTIONS:
            _require(options, "p", "x")
            closed, quadrature = ARC_FUNCTIONS[name]
            value = closed(options["p"], options["x"])
            return value, quadrature(options["p"], options["x"]) if oracle else None

        if name == "sin_p":
            _require(options, "p", "x")
            value = pt.sin_p(options["p"], options["x"])
            return value, pt.sin_p_quadrature(options["p"], options["x"]) if oracle else None

        if name == "hyp2f1":
            _require(options, "a", "b", "c", "z")
            args = HypergeometricArgs(options["a"], options["b"], options["c"], options["z"])
            return hyp2f1(args), hyp2f1_integral(args) if oracle else None

        if name == "gamma":
            _require(options, "x")
            return sf.gamma(options["x"]), _gamma_integral(options["x"]) if oracle else None

        if name == "digamma":
            _require(options, "x")
            return sf.digamma(options["x"]), _digamma_integral(options["x"]) if oracle else None

        _require(options, "x", "y")
        return sf.beta(options["x"], options["y"]), _beta_integral(options["x"], options["y"]) if oracle else None

    def handle(self, *args, **options):
        try:
            value, check = self._evaluate(options)
        except DomainError as e:
            raise CommandError(str(e), returncode=2)
        except NumericsError as e:
            raise CommandError(f"{options['function']} failed: {e}", returncode=2)

        self.stdout.write(format_number(value))
        if options["oracle"]:
            self.stdout.write(f"oracle {format_number(check)}")
            self.stdout.write(f"discrepancy {format_number(abs(value - check))}")
