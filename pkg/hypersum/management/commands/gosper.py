"""Run Gosper's algorithm on a hypergeometric term."""
from typing import Any, Dict

from django.core.management.base import CommandError, CommandParser

from hypersum.exact_arith import format_rational
from hypersum.gosper import (GosperCertificate, HyperTerm, algorithm_term, definite_sum_via_certificate, direct_sum,
                             gosper_summable)
from hypersum.management.base import EXIT_USAGE, HypersumCommand, polynomial_argument, rational_argument
from hypersum.polynomials import RationalFunction


class Command(HypersumCommand):
    """Run Gosper's algorithm on a hypergeometric term."""

    help = ('Find the anti-difference of a term given by its ratio num(n)/den(n) and t(0), '
            'or of the summand of 2F1(alpha, 1-k; -k; k/(alpha+k)) given --alpha and --k, '
            'and sum it from n0 to n1.')

    def add_arguments(self, parser: CommandParser) -> None:
        """Add arguments."""
        parser.add_argument('ratio_num', nargs='?', type=polynomial_argument,
                            help='Numerator of the term ratio, constant-first coefficients ("-1,0,1").')
        parser.add_argument('ratio_den', nargs='?', type=polynomial_argument,
                            help='Denominator of the term ratio.')
        parser.add_argument('t0', nargs='?', type=rational_argument, help='Value t(0) (default 1).')
        parser.add_argument('n0', nargs='?', type=int, help='First index of the sum (default 0).')
        parser.add_argument('n1', nargs='?', type=int, help='Last index of the sum (default 9, or k-1 with --k).')
        parser.add_argument('--alpha', type=rational_argument, help='Parameter alpha of the 2F1 summand.')
        parser.add_argument('--k', type=int, help='Parameter k of the 2F1 summand.')
        self.add_output_arguments(parser)

    def _term(self, options: Dict[str, Any]) -> HyperTerm:
        if options.get('alpha') is not None or options.get('k') is not None:
            if options.get('alpha') is None or options.get('k') is None:
                raise CommandError('Options --alpha and --k must be given together.', returncode=EXIT_USAGE)
            if options.get('ratio_num') is not None:
                raise CommandError('Give either a term ratio or --alpha and --k, not both.', returncode=EXIT_USAGE)
            return algorithm_term(options['alpha'], options['k'])
        if options.get('ratio_num') is None or options.get('ratio_den') is None:
            raise CommandError('Term ratio numerator and denominator are required.', returncode=EXIT_USAGE)
        if options['ratio_den'].is_zero:
            raise CommandError('Term ratio denominator is zero.', returncode=EXIT_USAGE)
        initial = options['t0'] if options.get('t0') is not None else 1
        return HyperTerm.from_ratio(RationalFunction(options['ratio_num'], options['ratio_den']), initial)

    def run(self, **options: Any) -> None:
        """Run the command."""
        term = self._term(options)
        n0 = options['n0'] if options.get('n0') is not None else 0
        if options.get('n1') is not None:
            n1 = options['n1']
        else:
            n1 = options['k'] - 1 if options.get('k') is not None else 9
        if n0 < 0 or n1 < n0:
            raise CommandError('Invalid range [{}, {}].'.format(n0, n1), returncode=EXIT_USAGE)
        certificate = gosper_summable(term)
        structured = self.is_structured(options)
        if certificate is None:
            if structured:
                self.write_record({'ratio': str(term.ratio), 'summable': False})
            else:
                self.stdout.write('not Gosper-summable')
            return
        total = definite_sum_via_certificate(term, n0, n1, certificate)
        expected = direct_sum(term, n0, n1)
        if structured:
            self.write_record(self._record(term, certificate, n0, n1, format_rational(total)))
            return
        self.stdout.write('ratio: {}'.format(term.ratio))
        self.stdout.write('normal form: a(n) = {}, b(n) = {}, c(n) = {}'.format(
            certificate.a, certificate.b, certificate.c))
        self.stdout.write('x(n) = {}'.format(certificate.xpoly))
        self.stdout.write('R(n) = {}'.format(certificate.certificate))
        self.stdout.write('sum over [{}, {}]: {}'.format(n0, n1, format_rational(total)))
        self.stdout.write('direct sum: {}'.format(format_rational(expected)))

    def _record(self, term: HyperTerm, certificate: GosperCertificate, n0: int, n1: int, total: str
                ) -> Dict[str, Any]:
        return {
            'ratio': str(term.ratio),
            'summable': True,
            'a': certificate.a.to_text(),
            'b': certificate.b.to_text(),
            'c': certificate.c.to_text(),
            'xpoly': certificate.xpoly.to_text(),
            'certificate': str(certificate.certificate),
            'n0': n0,
            'n1': n1,
            'sum': total,
        }
