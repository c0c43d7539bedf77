"""Truncated formal power series with exact coefficients."""
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from hypersum.errors import DomainError, ParseError, PoleError
from hypersum.exact_arith import RationalLike, as_rational, format_rational, parse_rational
from hypersum.polynomials import Polynomial


class TruncatedSeries:
    """
    Power series c_0 + c_1 x + ... + c_N x^N + O(x^(N+1)).

    :param coefficients: Leading coefficients; missing ones up to the order are zero, extra ones are dropped.
    :param order: The truncation order N, by default the number of coefficients minus one.
    :raise DomainError: If the order is negative.
    """

    __slots__ = ('order', 'coeffs')

    def __init__(self, coefficients: Iterable[RationalLike], order: Optional[int] = None) -> None:
        values = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(values) - 1
        if order < 0:
            raise DomainError('Series order must be non-negative, got {}.'.format(order))
        values = values[:order + 1]
        values.extend([as_rational(0)] * (order + 1 - len(values)))
        self.order = order  # type: int
        self.coeffs = tuple(values)  # type: Tuple

    @classmethod
    def zero(cls, order: int) -> 'TruncatedSeries':
        """Create the zero series."""
        return cls((), order)

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> 'TruncatedSeries':
        """Create a constant series."""
        return cls((value,), order)

    @classmethod
    def from_polynomial(cls, polynomial: Polynomial, order: int) -> 'TruncatedSeries':
        """Create the series of a polynomial in x."""
        return cls(polynomial.coefficients, order)

    @classmethod
    def from_text(cls, text: str) -> 'TruncatedSeries':
        """
        Parse a series in print format "c0, c1, ..., cN".

        :raise ParseError: If the text is malformed.
        """
        if not text.strip():
            raise ParseError('Empty series.')
        return cls(parse_rational(item) for item in text.split(','))

    def to_text(self) -> str:
        """Export the series in print format."""
        return ', '.join(format_rational(c) for c in self.coeffs)

    @property
    def is_zero(self) -> bool:
        """Whether all coefficients up to the order vanish."""
        return not any(self.coeffs)

    def __getitem__(self, index: int):
        return self.coeffs[index]

    def __iter__(self) -> Iterator:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> 'TruncatedSeries':
        return series_scale(self, -1)

    def __add__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return series_add(self, other)

    def __sub__(self, other: 'TruncatedSeries') -> 'TruncatedSeries':
        return series_sub(self, other)

    def truncate(self, order: int) -> 'TruncatedSeries':
        """Lower the truncation order."""
        return TruncatedSeries(self.coeffs, min(order, self.order))

    def evaluate(self, x: RationalLike):
        """Evaluate the truncated polynomial c_0 + ... + c_N x^N."""
        return Polynomial(self.coeffs)(x)

    def __repr__(self) -> str:
        return '{}([{}], order={})'.format(self.__class__.__name__, self.to_text(), self.order)


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Add two series, truncated at the common order."""
    order = min(s.order, t.order)
    return TruncatedSeries((a + b for a, b in zip(s.coeffs, t.coeffs)), order)


def series_sub(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Subtract two series, truncated at the common order."""
    order = min(s.order, t.order)
    return TruncatedSeries((a - b for a, b in zip(s.coeffs, t.coeffs)), order)


def series_scale(s: TruncatedSeries, factor: RationalLike) -> TruncatedSeries:
    """Multiply a series by a scalar."""
    factor = as_rational(factor)
    return TruncatedSeries((c * factor for c in s.coeffs), s.order)


def series_mul_poly(s: TruncatedSeries, p: Polynomial) -> TruncatedSeries:
    """Multiply a series by a polynomial in x."""
    return series_mul(s, TruncatedSeries.from_polynomial(p, s.order))


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Multiply two series (Cauchy product), truncated at the common order."""
    order = min(s.order, t.order)
    result = [as_rational(0)] * (order + 1)
    for i, a in enumerate(s.coeffs[:order + 1]):
        if a:
            for j, b in enumerate(t.coeffs[:order + 1 - i]):
                result[i + j] += a * b
    return TruncatedSeries(result, order)


def series_shift(s: TruncatedSeries, power: int) -> TruncatedSeries:
    """Multiply a series by x^power, keeping its order."""
    if power < 0:
        raise DomainError('Negative power of x: {}.'.format(power))
    return TruncatedSeries([0] * power + list(s.coeffs), s.order)


def pfq_series(upper: Sequence[RationalLike], lower: Sequence[RationalLike], order: int) -> TruncatedSeries:
    """
    Generate the generalized hypergeometric series pFq(upper; lower; x) to the given order.

    :raise PoleError: If a lower parameter makes a Pochhammer denominator vanish below the order.
    """
    upper = [as_rational(a) for a in upper]
    lower = [as_rational(b) for b in lower]
    coefficients = [as_rational(1)]
    for n in range(order):
        numerator = coefficients[-1]
        for a in upper:
            numerator *= a + n
        denominator = as_rational(n + 1)
        for b in lower:
            if not b + n:
                raise PoleError('Lower parameter {} blocks the series at index {}.'.format(format_rational(b), n + 1))
            denominator *= b + n
        coefficients.append(numerator / denominator)
    return TruncatedSeries(coefficients, order)


def hg_series(a: RationalLike, b: RationalLike, c: RationalLike, order: int) -> TruncatedSeries:
    """
    Generate 2F1(a, b; c; x) to the given order: c_n = (a)_n (b)_n / ((c)_n n!).

    :raise PoleError: If c is in {0, -1, ..., -(order-1)}; use the extended evaluator instead.
    """
    return pfq_series((a, b), (c,), order)


def binomial_series(exponent: RationalLike, order: int) -> TruncatedSeries:
    """Generate (1 - x)^exponent, i.e. c_n = (-exponent)_n / n!."""
    return pfq_series((-as_rational(exponent),), (), order)


def lmm1_lhs_series(alpha: RationalLike, gamma: RationalLike, order: int) -> TruncatedSeries:
    """
    Generate 2F1(alpha, 1+gamma; gamma; x) to the given order.

    Coefficients are (alpha)_n (gamma+n) / (gamma n!), using (1+gamma)_n / (gamma)_n = (gamma+n)/gamma,
    which also holds on the blocked set gamma in {-1, -2, ...}.

    :raise PoleError: If gamma is zero.
    """
    alpha = as_rational(alpha)
    gamma = as_rational(gamma)
    if not gamma:
        raise PoleError('Lower parameter gamma must be nonzero.')
    coefficients = []
    running = as_rational(1)
    for n in range(order + 1):
        coefficients.append(running * (gamma + n) / gamma)
        running = running * (alpha + n) / (n + 1)
    return TruncatedSeries(coefficients, order)


def linear_factor(constant: RationalLike, slope: RationalLike) -> Polynomial:
    """Create the polynomial constant + slope * x."""
    return Polynomial((constant, slope))

