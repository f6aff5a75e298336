from django.core.management.base import BaseCommand, CommandError

from inequalities.turning_points import solve_x0, u2_residual
from quadrature.exceptions import DomainError
from quadrature.formatting import format_number


class Command(BaseCommand):
    help = "Solves q x^(q-p) + (q-p) x^q = p for the turning point x0 in (0, 1)"

    def add_arguments(self, parser):
        parser.add_argument("--p", type=float, required=True)
        parser.add_argument("--q", type=float, required=True)

    def handle(self, *args, **options):
        try:
            x0 = solve_x0(options["p"], options["q"])
            residual = u2_residual(options["p"], options["q"])
        except DomainError as e:
            raise CommandError(str(e), returncode=2)

        self.stdout.write(format_number(x0))
        self.stdout.write(f"residual {format_number(residual)}")
