from django.core.management.base import BaseCommand, CommandError

from means.bivariate import MeanInput
from means.generalized import CHAIN_POSITIONS, all_means
from quadrature.exceptions import DomainError
from quadrature.formatting import format_number


def _chain_key(label: str) -> str:
    """'P~[p=2]' -> 'P~'; classical labels are their own key."""
    return label.split("[", 1)[0]


class Command(BaseCommand):
    help = "Prints every mean of (a, b) at order p in ascending order"

    def add_arguments(self, parser):
        parser.add_argument("--p", type=float, required=True)
        parser.add_argument("--a", type=float, required=True)
        parser.add_argument("--b", type=float, required=True)

    def handle(self, *args, **options):
        try:
            rows = all_means(options["p"], MeanInput(options["a"], options["b"]))
        except DomainError as e:
            raise CommandError(str(e), returncode=2)

        for row in rows:
            position = CHAIN_POSITIONS.get(_chain_key(row.label))
            line = f"{row.label}\t{format_number(row.value)}"
            if position is not None:
                line += f"\tchain {position}"
            self.stdout.write(line)
