"""
Indefinite hypergeometric summation.

Gosper's algorithm decides whether a hypergeometric term t(n) has a hypergeometric
anti-difference f(n) = R(n) t(n) with f(n+1) - f(n) = t(n) and constructs the
certificate R(n) if so.
"""
import logging
from fractions import Fraction
from functools import partial
from typing import Callable, List, Optional, Tuple

from hypersum.datamodels import DataModel
from hypersum.errors import CertificateError, DomainError, NotSummableError, PoleError
from hypersum.exact_arith import (RationalLike, as_rational, factorial, format_rational, pochhammer,
                                  rational_pow, reciprocal_factorial)
from hypersum.polynomials import (ONE, Polynomial, RationalFunction, dispersion, exact_quotient, poly_gcd,
                                  poly_product, shift, solve_gosper_equation)

LOGGER = logging.getLogger('hypersum.gosper')

TermEvaluator = Callable[[int], Fraction]


class HyperTerm(DataModel):
    """
    A hypergeometric term t(n), n >= 0.

    Values are produced by the evaluator if one is given. Otherwise they are generated
    from t(0) by the ratio, which fails at a pole of the ratio.
    """

    FIELDS = ['ratio', 'initial', 'evaluator']
    ratio = None  # type: RationalFunction
    """The term ratio t(n+1)/t(n)."""
    initial = None  # type: Fraction
    """The value t(0)."""
    evaluator = None  # type: Optional[TermEvaluator]
    """Direct evaluation of t(n) from the parameters of the term."""

    @classmethod
    def from_ratio(cls, ratio: RationalFunction, initial: RationalLike = 1) -> 'HyperTerm':
        """Create a term generated from its ratio and initial value."""
        return cls(ratio=ratio, initial=as_rational(initial), evaluator=None)

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(RationalFunction, 'ratio', required=True)
        self.validate_fields(Fraction, 'initial', required=True)
        if self.evaluator is not None and not callable(self.evaluator):
            raise DomainError('Term evaluator must be callable.')

    def values(self, n0: int, n1: int) -> List[Fraction]:
        """
        Return t(n0), ..., t(n1).

        :raise PoleError: If the ratio has a pole before n1 and there is no evaluator.
        """
        if n0 < 0 or n1 < n0 - 1:
            raise DomainError('Invalid range [{}, {}].'.format(n0, n1))
        if self.evaluator is not None:
            return [as_rational(self.evaluator(n)) for n in range(n0, n1 + 1)]
        result = []
        value = self.initial
        for n in range(n1 + 1):
            if n >= n0:
                result.append(value)
            if n < n1:
                value = value * self.ratio(n)
        return result

    def value(self, n: int) -> Fraction:
        """Return t(n)."""
        return self.values(n, n)[0]


class GosperCertificate(DataModel):
    """
    Result of Gosper's algorithm.

    The ratio is written as r(n) = a(n)/b(n) * c(n+1)/c(n) and x solves
    a(n) x(n+1) - b(n-1) x(n) = c(n). The certificate is R(n) = b(n-1) x(n) / c(n).
    """

    FIELDS = ['ratio', 'a', 'b', 'c', 'xpoly', 'certificate']
    ratio = None  # type: RationalFunction
    a = None  # type: Polynomial
    b = None  # type: Polynomial
    c = None  # type: Polynomial
    xpoly = None  # type: Polynomial
    certificate = None  # type: RationalFunction

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(RationalFunction, 'ratio', 'certificate', required=True)
        self.validate_fields(Polynomial, 'a', 'b', 'c', 'xpoly', required=True)

    def check(self) -> None:
        """
        Check the certificate identities symbolically.

        :raise CertificateError: If the normal form, the Gosper equation or R(n+1) r(n) - R(n) = 1 fail.
        """
        if RationalFunction(self.a, self.b) * RationalFunction(shift(self.c, 1), self.c) != self.ratio:
            raise CertificateError('Normal form does not reproduce the ratio {}.'.format(self.ratio))
        if self.a * shift(self.xpoly, 1) - shift(self.b, -1) * self.xpoly != self.c:
            raise CertificateError('Gosper equation does not hold for x(n) = {}.'.format(self.xpoly))
        if self.certificate.shift(1) * self.ratio - self.certificate != 1:
            raise CertificateError('Certificate {} does not telescope.'.format(self.certificate))

    def antidifference(self, term: HyperTerm, n: int) -> Fraction:
        """
        Evaluate f(n) = R(n) t(n).

        At a removable pole of R the value is carried over from the nearest regular point
        through f(m+1) - f(m) = t(m), looking backwards first.

        :raise PoleError: If no regular point is found.
        """
        if self.certificate.is_regular_at(n):
            return self.certificate(n) * term.value(n)
        for distance in range(1, self.certificate.den.degree + 2):
            for m in (n - distance, n + distance):
                if m < 0 or not self.certificate.is_regular_at(m):
                    continue
                try:
                    anchor = self.certificate(m) * term.value(m)
                    if m < n:
                        return anchor + sum(term.values(m, n - 1))
                    return anchor - sum(term.values(n, m - 1))
                except PoleError:
                    continue
        raise PoleError('Anti-difference undefined at n = {}.'.format(n))


def term_ratio_2f1(a: RationalLike, b: RationalLike, c: RationalLike, x: RationalLike) -> RationalFunction:
    """Return the term ratio (a+n)(b+n)x / ((c+n)(1+n)) of 2F1 in lowest terms."""
    a, b, c, x = (as_rational(v) for v in (a, b, c, x))
    return RationalFunction((Polynomial.linear(-a) * Polynomial.linear(-b)).scale(x),
                            Polynomial.linear(-c) * Polynomial.linear(-1))


def gpnf(ratio: RationalFunction) -> Tuple[Polynomial, Polynomial, Polynomial]:
    """
    Compute the Gosper-Petkovsek normal form r(n) = a(n)/b(n) * c(n+1)/c(n).

    :return: (a, b, c) with gcd(a(n), b(n+j)) = 1 for all j >= 0 and c monic.
    :raise DomainError: If the ratio is zero.
    :raise CertificateError: If the normal form does not reproduce the ratio.
    """
    if ratio.is_zero:
        raise DomainError('Normal form of a zero ratio.')
    a, b, c = ratio.num, ratio.den, ONE
    for j in sorted(dispersion(a, b)):
        while True:
            s = poly_gcd(a, shift(b, j))
            if s.degree < 1:
                break
            a = exact_quotient(a, s)
            b = exact_quotient(b, shift(s, -j))
            c = c * poly_product(shift(s, -i) for i in range(1, j + 1))
    if RationalFunction(a, b) * RationalFunction(shift(c, 1), c) != ratio:
        raise CertificateError('Normal form ({}, {}, {}) does not reproduce {}.'.format(a, b, c, ratio))
    LOGGER.debug('Normal form of %s: a = %s, b = %s, c = %s', ratio, a, b, c)
    return a, b, c


def gosper_summable(term: HyperTerm) -> Optional[GosperCertificate]:
    """
    Run Gosper's algorithm.

    :return: A checked certificate or None if the term has no hypergeometric anti-difference.
    """
    a, b, c = gpnf(term.ratio)
    xpoly = solve_gosper_equation(a, b, c)
    if xpoly is None:
        LOGGER.debug('Term with ratio %s is not Gosper-summable.', term.ratio)
        return None
    certificate = GosperCertificate(ratio=term.ratio, a=a, b=b, c=c, xpoly=xpoly,
                                    certificate=RationalFunction(shift(b, -1) * xpoly, c))
    certificate.check()
    LOGGER.debug('Certificate of %s: R(n) = %s', term.ratio, certificate.certificate)
    return certificate


def direct_sum(term: HyperTerm, n0: int, n1: int) -> Fraction:
    """Sum t(n0) + ... + t(n1) term by term."""
    return sum(term.values(n0, n1), Fraction(0))


def definite_sum_via_certificate(term: HyperTerm, n0: int, n1: int,
                                 certificate: Optional[GosperCertificate] = None) -> Fraction:
    """
    Sum t(n0) + ... + t(n1) as f(n1+1) - f(n0).

    :raise NotSummableError: If the term is not Gosper-summable.
    :raise CertificateError: If the telescoped sum differs from the direct sum.
    """
    if certificate is None:
        certificate = gosper_summable(term)
        if certificate is None:
            raise NotSummableError('Term with ratio {} is not Gosper-summable.'.format(term.ratio))
    total = certificate.antidifference(term, n1 + 1) - certificate.antidifference(term, n0)
    expected = direct_sum(term, n0, n1)
    if total != expected:
        raise CertificateError('Telescoped sum {} differs from the direct sum {}.'.format(
            format_rational(total), format_rational(expected)))
    return total


def _algorithm_argument(alpha: Fraction, k: int) -> Fraction:
    if k < 1:
        raise DomainError('k must be a positive integer, got {}.'.format(k))
    if not alpha + k:
        raise DomainError('alpha + k must be nonzero, got alpha = {}, k = {}.'.format(format_rational(alpha), k))
    return Fraction(k) / (alpha + k)


def closed_antidifference(alpha: RationalLike, k: int, n: int) -> Fraction:
    """
    Evaluate f(n) = (alpha+k)/k * (alpha+1)_(n-1)/(n-1)! * (k/(alpha+k))^n, with f(0) = 0.

    :raise DomainError: If alpha + k = 0.
    """
    alpha = as_rational(alpha)
    x = _algorithm_argument(alpha, k)
    if n < 1:
        return Fraction(0)
    return (alpha + k) / k * pochhammer(alpha + 1, n - 1) * reciprocal_factorial(n - 1) * rational_pow(x, n)


def algorithm_summand(alpha: RationalLike, k: int, n: int) -> Fraction:
    """
    Evaluate (alpha)_n (k-n) / (k n!) * (k/(alpha+k))^n.

    For n <= k-1 this equals (alpha)_n (1-k)_n / ((-k)_n n!) * (k/(alpha+k))^n and it vanishes at n = k.

    :raise DomainError: If alpha + k = 0.
    """
    alpha = as_rational(alpha)
    x = _algorithm_argument(alpha, k)
    return pochhammer(alpha, n) * (k - n) / (k * factorial(n)) * rational_pow(x, n)


def algorithm_term(alpha: RationalLike, k: int) -> HyperTerm:
    """Create the summand of 2F1(alpha, 1-k; -k; k/(alpha+k)) as a term evaluated from its parameters."""
    alpha = as_rational(alpha)
    x = _algorithm_argument(alpha, k)
    ratio = RationalFunction((Polynomial.linear(-alpha) * Polynomial.linear(k - 1)).scale(x),
                             Polynomial.linear(-1) * Polynomial.linear(k))
    return HyperTerm(ratio=ratio, initial=Fraction(1), evaluator=partial(algorithm_summand, alpha, k))
