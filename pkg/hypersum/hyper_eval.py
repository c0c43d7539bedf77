"""Point evaluation of 2F1 and 1F0 over exact rationals."""
import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence

from hypersum.constants import DEFAULT_EPS, Classification, EvalMode
from hypersum.datamodels import DataModel
from hypersum.errors import ClassificationError, DomainError, IllDefinedError, ParseError, ValidationError
from hypersum.exact_arith import (RationalLike, as_rational, format_rational, is_nonpositive_integer,
                                  parse_rational)
from hypersum.polynomials import Polynomial, poly_product
from hypersum.power_series import TruncatedSeries, pfq_series

LOGGER = logging.getLogger('hypersum.hyper_eval')


class HGParams(DataModel):
    """Parameters of 2F1(a, b; c; x)."""

    FIELDS = ['a', 'b', 'c', 'x']
    a = None  # type: Fraction
    b = None  # type: Fraction
    c = None  # type: Fraction
    x = None  # type: Fraction

    @classmethod
    def create(cls, a: RationalLike, b: RationalLike, c: RationalLike, x: RationalLike) -> 'HGParams':
        """Create parameters from rationals, integers or rational text."""
        return cls(a=as_rational(a), b=as_rational(b), c=as_rational(c), x=as_rational(x))

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(Fraction, 'a', 'b', 'c', 'x', required=True)

    def __str__(self) -> str:
        return '2F1({}, {}; {}; {})'.format(*(format_rational(v) for v in self))


class EvalResult(DataModel):
    """An exact value or a rational enclosure of a series value."""

    FIELDS = ['mode', 'value', 'lo', 'hi']
    mode = None  # type: EvalMode
    value = None  # type: Optional[Fraction]
    """The value in exact mode."""
    lo = None  # type: Optional[Fraction]
    """The lower bound in enclosure mode."""
    hi = None  # type: Optional[Fraction]
    """The upper bound in enclosure mode."""

    @classmethod
    def exact(cls, value: RationalLike) -> 'EvalResult':
        """Create an exact result."""
        return cls(mode=EvalMode.EXACT, value=as_rational(value))

    @classmethod
    def enclosure(cls, lo: RationalLike, hi: RationalLike) -> 'EvalResult':
        """Create an enclosure."""
        return cls(mode=EvalMode.ENCLOSURE, lo=as_rational(lo), hi=as_rational(hi))

    @classmethod
    def from_text(cls, text: str) -> 'EvalResult':
        """
        Parse a result written by :meth:`to_text`.

        :raise ParseError: If the text is malformed.
        """
        text = text.strip()
        if text.startswith('[') and text.endswith(']'):
            bounds = text[1:-1].split(',')
            if len(bounds) != 2:
                raise ParseError('Invalid enclosure: {!r}.'.format(text))
            result = cls.enclosure(parse_rational(bounds[0]), parse_rational(bounds[1]))
        else:
            result = cls.exact(parse_rational(text))
        try:
            result.validate()
        except ValidationError as e:
            raise ParseError(str(e)) from None
        return result

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(EvalMode, 'mode', required=True)
        if self.mode is EvalMode.EXACT:
            self.validate_fields(Fraction, 'value', required=True)
        else:
            self.validate_fields(Fraction, 'lo', 'hi', required=True)
            if self.lo > self.hi:
                raise ValidationError({'lo': 'Lower bound exceeds the upper bound.'})

    @property
    def width(self) -> Fraction:
        """Width of the enclosure, zero for exact values."""
        return Fraction(0) if self.mode is EvalMode.EXACT else self.hi - self.lo

    def contains(self, value: RationalLike) -> bool:
        """Check whether an exact value is equal to or enclosed by this result."""
        value = as_rational(value)
        if self.mode is EvalMode.EXACT:
            return self.value == value
        return self.lo <= value <= self.hi

    def to_text(self) -> str:
        """Format as rational text or "[lo, hi]"."""
        if self.mode is EvalMode.EXACT:
            return format_rational(self.value)
        return '[{}, {}]'.format(format_rational(self.lo), format_rational(self.hi))


def classify(a: RationalLike, b: RationalLike, c: RationalLike) -> Classification:
    """Classify 2F1(a, b; c; x) by its parameters, including the extension to non-positive integer c."""
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    if is_nonpositive_integer(c):
        qualifying = [p for p in (a, b) if is_nonpositive_integer(p) and p > c]
        return Classification.EXTENDED_TERMINATING if qualifying else Classification.UNDEFINED
    if is_nonpositive_integer(a) or is_nonpositive_integer(b):
        return Classification.STANDARD_TERMINATING
    return Classification.NON_TERMINATING


def truncation_index(a: RationalLike, b: RationalLike, c: RationalLike) -> int:
    """
    Return the index of the last term of a terminating 2F1.

    Among several admissible upper parameters the one of smallest absolute value is taken.

    :raise ClassificationError: If the series does not terminate.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    classification = classify(a, b, c)
    if not classification.is_terminating:
        raise ClassificationError('2F1({}, {}; {}; x) is {}, not terminating.'.format(
            format_rational(a), format_rational(b), format_rational(c), classification.value))
    candidates = [p for p in (a, b) if is_nonpositive_integer(p)]
    if classification is Classification.EXTENDED_TERMINATING:
        candidates = [p for p in candidates if p > c]
    return int(min(abs(p) for p in candidates))


def terminating_series(a: RationalLike, b: RationalLike, c: RationalLike,
                       order: Optional[int] = None) -> TruncatedSeries:
    """
    Return the coefficients of a (possibly extended) terminating 2F1 as a zero-padded series.

    :param order: The series order, by default the truncation index.
    :raise ClassificationError: If the series does not terminate.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    last = truncation_index(a, b, c)
    coefficients = [as_rational(1)]
    for n in range(last):
        coefficients.append(coefficients[-1] * (a + n) * (b + n) / ((c + n) * (n + 1)))
    return TruncatedSeries(coefficients, last if order is None else order)


def eval_terminating(params: HGParams) -> Fraction:
    """
    Sum a terminating 2F1 exactly.

    :raise ClassificationError: If the series does not terminate.
    """
    value = terminating_series(params.a, params.b, params.c).evaluate(params.x)
    LOGGER.debug('%s = %s', params, format_rational(value))
    return value


def tail_start_index(upper: Sequence[Fraction], lower: Sequence[Fraction], x: Fraction, ratio: Fraction) -> int:
    """
    Find an index from which the term ratio of a pFq series (p = q + 1) never exceeds the given ratio.

    For n > max |parameter| the term ratio |x| prod|a_i + n| / (prod|b_j + n| (n+1)) is bounded by
    |x| prod(n + |a_i|) / (prod(n - |b_j|) (n+1)), so it suffices that
    q(n) = ratio (n+1) prod(n - |b_j|) - |x| prod(n + |a_i|) is non-negative.

    :param upper: The upper parameters.
    :param lower: The lower parameters.
    :param x: The argument, |x| < ratio.
    :param ratio: The bound r, strictly between |x| and 1.
    """
    start = math.ceil(max((abs(p) for p in (*upper, *lower)), default=Fraction(0))) + 1
    bound = (poly_product(Polynomial.linear(abs(b)) for b in lower) * Polynomial.linear(-1)).scale(ratio) \
        - poly_product(Polynomial.linear(-abs(a)) for a in upper).scale(abs(x))
    return _first_nonnegative_index(bound, start)


def _first_nonnegative_index(q: Polynomial, start: int) -> int:
    """
    Return the least n >= start with q(m) >= 0 for every integer m >= n.

    :param q: A polynomial of degree at most two with a positive leading coefficient.
    """
    if q.degree <= 0:
        return start
    if q.degree == 1:
        return max(start, math.ceil(-q.coeff(0) / q.coeff(1)))
    if q.degree > 2:
        raise DomainError('Tail bound supports ratio polynomials of degree at most two.')
    low = max(start, math.ceil(-q.coeff(1) / (2 * q.coeff(2))))
    if q(low) >= 0:
        return low
    high = low + 1
    while q(high) < 0:
        high = 2 * high
    while high - low > 1:
        middle = (low + high) // 2
        if q(middle) >= 0:
            high = middle
        else:
            low = middle
    return high


def _enclose(upper: Sequence[Fraction], lower: Sequence[Fraction], x: Fraction, eps: Fraction) -> EvalResult:
    """Enclose a convergent pFq series (p = q + 1, |x| < 1) by partial sums and a geometric tail bound."""
    if not x:
        return EvalResult.enclosure(1, 1)
    ratio = (1 + abs(x)) / 2
    start = tail_start_index(upper, lower, x, ratio)
    LOGGER.debug('Geometric tail bound with ratio %s holds from index %d.', format_rational(ratio), start)

    total = Fraction(0)
    term = Fraction(1)
    n = 0
    while True:
        total += term
        if n >= start:
            tail = abs(term) * ratio / (1 - ratio)
            if 2 * tail <= eps:
                break
        numerator = term * x
        for a in upper:
            numerator *= a + n
        denominator = Fraction(n + 1)
        for b in lower:
            denominator *= b + n
        term = numerator / denominator
        n += 1
    LOGGER.debug('Enclosure after %d terms, width %s.', n + 1, format_rational(2 * tail))
    return EvalResult.enclosure(total - tail, total + tail)


def _check_eps(eps: RationalLike) -> Fraction:
    eps = as_rational(eps)
    if eps <= 0:
        raise DomainError('Tolerance must be positive, got {}.'.format(format_rational(eps)))
    return eps


def _check_disk(x: Fraction, description: str) -> None:
    if abs(x) >= 1:
        raise IllDefinedError(
            'The value of non-terminating {} at x = {} is ill-defined: |x| >= 1 lies outside the disk of '
            'convergence.'.format(description, format_rational(x)))


def eval_convergent(params: HGParams, eps: RationalLike = DEFAULT_EPS) -> EvalResult:
    """
    Enclose a non-terminating 2F1 inside its disk of convergence.

    :param params: The parameters.
    :param eps: The maximal width of the enclosure.
    :return: An enclosure [lo, hi] with hi - lo <= eps.
    :raise IllDefinedError: If |x| >= 1.
    :raise DomainError: If eps <= 0.
    :raise ClassificationError: If the series terminates or is undefined.
    """
    classification = classify(params.a, params.b, params.c)
    if classification is not Classification.NON_TERMINATING:
        raise ClassificationError('{} is {}, not non-terminating.'.format(params, classification.value))
    _check_disk(params.x, str(params))
    return _enclose((params.a, params.b), (params.c,), params.x, _check_eps(eps))


def eval_1f0(a: RationalLike, x: RationalLike, eps: RationalLike = DEFAULT_EPS) -> EvalResult:
    """
    Evaluate 1F0(a; -; x), the binomial series of (1 - x)^(-a).

    :return: The exact finite sum if a is a non-positive integer, an enclosure otherwise.
    :raise IllDefinedError: If the series does not terminate and |x| >= 1.
    :raise DomainError: If eps <= 0.
    """
    a, x = as_rational(a), as_rational(x)
    if is_nonpositive_integer(a):
        return EvalResult.exact(pfq_series((a,), (), int(-a)).evaluate(x))
    _check_disk(x, '1F0({}; -; x)'.format(format_rational(a)))
    return _enclose((a,), (), x, _check_eps(eps))


def evaluate(params: HGParams, eps: RationalLike = DEFAULT_EPS) -> EvalResult:
    """
    Evaluate 2F1 according to its classification.

    :raise ClassificationError: If the series is undefined.
    :raise IllDefinedError: If a non-terminating series is evaluated at |x| >= 1.
    """
    classification = classify(params.a, params.b, params.c)
    if classification.is_terminating:
        return EvalResult.exact(eval_terminating(params))
    if classification is Classification.UNDEFINED:
        raise ClassificationError(
            '{} is undefined: c is a non-positive integer and no upper parameter b is a non-positive integer '
            'with c < b.'.format(params))
    return eval_convergent(params, eps)


def partial_sums(params: HGParams, count: int) -> List[Fraction]:
    """Return the first partial sums of a 2F1 series whose lower parameter does not block them."""
    series = pfq_series((params.a, params.b), (params.c,), count - 1)
    sums = []
    total = Fraction(0)
    power = Fraction(1)
    for coefficient in series:
        total += coefficient * power
        power *= params.x
        sums.append(total)
    return sums
