"""Base of hypersum commands."""
import json
import logging
import re
from argparse import ArgumentTypeError
from fractions import Fraction
from typing import Any, Dict, List

from django.core.management.base import BaseCommand, CommandError, CommandParser

from hypersum.constants import OutputFormat
from hypersum.errors import HypersumError, ParseError, ValidationError
from hypersum.exact_arith import parse_rational
from hypersum.identities.models import IdentityReport
from hypersum.identities.runner import summarize
from hypersum.polynomials import Polynomial
from hypersum.settings import SETTINGS

LOGGER = logging.getLogger('hypersum.commands')

EXIT_FAILURE = 1
EXIT_USAGE = 2

# Rationals such as -1/2 and polynomials such as -1,0,1 are positional, not options.
NEGATIVE_RATIONAL_RE = re.compile(r'^-\d+(/\d+)?(,-?\d+(/\d+)?)*$')


def rational_argument(text: str) -> Fraction:
    """Parse a rational command line argument."""
    try:
        return parse_rational(text)
    except ParseError as e:
        raise ArgumentTypeError(str(e)) from None


def polynomial_argument(text: str) -> Polynomial:
    """Parse a polynomial command line argument."""
    try:
        return Polynomial.from_text(text)
    except ParseError as e:
        raise ArgumentTypeError(str(e)) from None


class HypersumCommand(BaseCommand):
    """
    Base of hypersum commands.

    Subclasses implement :meth:`run`; errors of hypersum are reported as command errors
    with exit code 2 for unparsable input and 1 otherwise.
    """

    requires_system_checks = []  # type: List[str]

    def create_parser(self, prog_name: str, subcommand: str, **kwargs: Any) -> CommandParser:
        """Create a parser accepting negative rationals as positional arguments."""
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser._negative_number_matcher = NEGATIVE_RATIONAL_RE
        return parser

    def add_output_arguments(self, parser: CommandParser) -> None:
        """Add the --json flag."""
        parser.add_argument('--json', action='store_true', dest='json',
                            help='Print one JSON record per line instead of text.')

    def add_order_argument(self, parser: CommandParser) -> None:
        """Add the --order flag."""
        parser.add_argument('--order', type=int, help='Series order (default HYPERSUM_SERIES_ORDER).')

    def add_eps_argument(self, parser: CommandParser) -> None:
        """Add the --eps flag."""
        parser.add_argument('--eps', type=rational_argument, help='Enclosure width (default HYPERSUM_EPS).')

    def handle(self, *args: Any, **options: Any) -> None:
        """Configure logging, run the command and translate errors."""
        if options.get('verbosity', 1) >= 2:
            logging.getLogger('hypersum').setLevel(logging.DEBUG)
        if options.get('order') is not None and options['order'] < 0:
            raise CommandError('Series order must be non-negative.', returncode=EXIT_USAGE)
        if options.get('eps') is not None and options['eps'] <= 0:
            raise CommandError('Tolerance must be positive.', returncode=EXIT_USAGE)
        try:
            self.run(**options)
        except (ParseError, ValidationError) as e:
            raise CommandError(str(e), returncode=EXIT_USAGE) from None
        except HypersumError as e:
            LOGGER.debug('Command %s failed: %r', self.__class__.__module__, e)
            raise CommandError(str(e), returncode=EXIT_FAILURE) from None

    def run(self, **options: Any) -> None:
        """Run the command."""
        raise NotImplementedError

    def is_structured(self, options: Dict[str, Any]) -> bool:
        """Whether to print JSON records."""
        return bool(options.get('json')) or SETTINGS.output_format is OutputFormat.STRUCTURED

    def write_record(self, record: Dict[str, Any]) -> None:
        """Print a single-line JSON record."""
        self.stdout.write(json.dumps(record, separators=(', ', ': ')))

    def write_reports(self, reports: List[IdentityReport], structured: bool) -> None:
        """
        Print reports and fail if any identity does not hold.

        :raise CommandError: With exit code 1 if a report is not equal.
        """
        for report in reports:
            if structured:
                self.stdout.write(report.export_json())
            else:
                self.stdout.write(format_report(report))
        summary = summarize(reports)
        message = '{total} reports: {passed} passed, {failed} failed.'.format(**summary)
        if not structured:
            self.stdout.write(message)
        if summary['failed']:
            raise CommandError(message, returncode=EXIT_FAILURE)


def format_report(report: IdentityReport) -> str:
    """Format a report as a line of text."""
    verdict = 'PASS' if report.equal else 'FAIL'
    if report.lhs is None or report.rhs is None:
        return '{} {}: {}'.format(verdict, report.instance, report.error)
    relation = {'exact': '=', 'enclosure': 'contains', 'series': '='}[report.mode.value]
    line = '{} {} [{}]: {} {} {}'.format(verdict, report.instance, report.mode.value, report.lhs.to_text(), relation,
                                         report.rhs.to_text())
    if report.error:
        line += ' ({})'.format(report.error)
    return line
