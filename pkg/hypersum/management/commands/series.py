"""Expand 2F1(a, b; c; x) or 1F0(a; -; x) as a truncated power series."""
from typing import Any

from django.core.management.base import CommandError, CommandParser

from hypersum.constants import Classification
from hypersum.hyper_eval import classify, terminating_series
from hypersum.management.base import EXIT_USAGE, HypersumCommand, rational_argument
from hypersum.power_series import hg_series, pfq_series
from hypersum.settings import SETTINGS


class Command(HypersumCommand):
    """Expand 2F1(a, b; c; x) or 1F0(a; -; x) as a truncated power series."""

    help = 'Print the coefficients c0, ..., cN of 2F1(a, b; c; x) given three parameters or 1F0(a; -; x) given one.'

    def add_arguments(self, parser: CommandParser) -> None:
        """Add arguments."""
        parser.add_argument('params', nargs='+', type=rational_argument, metavar='PARAM',
                            help='Either a, or a b c, in rational text format.')
        self.add_order_argument(parser)
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        """Run the command."""
        params = options['params']
        order = options['order'] if options.get('order') is not None else SETTINGS.series_order
        if len(params) == 1:
            series = pfq_series(params, (), order)
        elif len(params) == 3:
            if classify(*params) is Classification.EXTENDED_TERMINATING:
                series = terminating_series(*params, order=order)
            else:
                series = hg_series(*params, order)
        else:
            raise CommandError('Expected 1 or 3 parameters, got {}.'.format(len(params)), returncode=EXIT_USAGE)
        if self.is_structured(options):
            self.write_record({'order': series.order, 'coefficients': series.to_text()})
        else:
            self.stdout.write(series.to_text())
