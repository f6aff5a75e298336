from django.core.management.base import BaseCommand, CommandError

from ptrig.constants import constants
from quadrature.exceptions import DomainError, NumericsError
from quadrature.formatting import format_number


class Command(BaseCommand):
    help = "Prints pi_p, a_p, b_p and c_p with the disagreement between their independent evaluations"

    def add_arguments(self, parser):
        parser.add_argument("--p", type=float, required=True)

    def handle(self, *args, **options):
        try:
            result = constants(options["p"])
        except DomainError as e:
            raise CommandError(str(e), returncode=2)
        except NumericsError as e:
            raise CommandError(f"constants failed at p={options['p']}: {e}", returncode=2)

        for name in ("p", "pi_p", "a_p", "b_p", "c_p", "pi_residual", "b_residual", "c_residual"):
            self.stdout.write(f"{name} {format_number(getattr(result, name))}")
