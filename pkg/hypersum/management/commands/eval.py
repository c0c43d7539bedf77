"""Evaluate 2F1(a, b; c; x) or 1F0(a; -; x)."""
from typing import Any

from django.core.management.base import CommandError, CommandParser

from hypersum.constants import Classification
from hypersum.exact_arith import is_nonpositive_integer
from hypersum.hyper_eval import HGParams, classify, eval_1f0, evaluate
from hypersum.management.base import EXIT_USAGE, HypersumCommand, rational_argument
from hypersum.settings import SETTINGS


class Command(HypersumCommand):
    """Evaluate 2F1(a, b; c; x) or 1F0(a; -; x)."""

    help = 'Evaluate 2F1(a, b; c; x) given four parameters or 1F0(a; -; x) given two.'

    def add_arguments(self, parser: CommandParser) -> None:
        """Add arguments."""
        parser.add_argument('params', nargs='+', type=rational_argument, metavar='PARAM',
                            help='Either a x, or a b c x, in rational text format.')
        parser.add_argument('--classify', action='store_true',
                            help='Prefix the value with the classification of the series.')
        self.add_eps_argument(parser)
        self.add_output_arguments(parser)

    def run(self, **options: Any) -> None:
        """Run the command."""
        params = options['params']
        eps = options['eps'] if options.get('eps') is not None else SETTINGS.eps
        if len(params) == 2:
            a, x = params
            classification = 'terminating' if is_nonpositive_integer(a) else Classification.NON_TERMINATING.value
            result = eval_1f0(a, x, eps)
        elif len(params) == 4:
            hg_params = HGParams.create(*params)
            classification = classify(hg_params.a, hg_params.b, hg_params.c).value
            result = evaluate(hg_params, eps)
        else:
            raise CommandError('Expected 2 or 4 parameters, got {}.'.format(len(params)), returncode=EXIT_USAGE)
        if self.is_structured(options):
            self.write_record({'classification': classification, 'mode': result.mode.value,
                               'value': result.to_text()})
        elif options['classify']:
            self.stdout.write('{}: {}'.format(classification, result.to_text()))
        else:
            self.stdout.write(result.to_text())
