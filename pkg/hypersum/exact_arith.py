"""
Exact rational arithmetic and combinatorial kernels.

Every parameter and coefficient handled by hypersum is an :class:`ExactRational`,
i.e. a :class:`fractions.Fraction`, which is normalized on construction
(positive denominator, coprime terms, zero is ``0/1``).
"""
import math
import re
from fractions import Fraction
from typing import Union

from hypersum.errors import DomainError, ParseError

ExactRational = Fraction
RationalLike = Union[int, Fraction, str]

RATIONAL_RE = re.compile(r'^([-−]?)(\d+)(?:/(\d+))?$')


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational in text format.

    :param text: Optional leading minus, decimal integer, optional "/" and decimal integer ("-22/7", "3").
    :return: The normalized rational.
    :raise ParseError: If the text is malformed or the denominator is zero.
    """
    match = RATIONAL_RE.match(text.strip())
    if match is None:
        raise ParseError('Invalid rational: {!r}.'.format(text))
    sign, numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise ParseError('Zero denominator: {!r}.'.format(text))
    value = Fraction(int(numerator), int(denominator) if denominator is not None else 1)
    return -value if sign else value


def format_rational(value: Union[int, Fraction]) -> str:
    """Format a rational in text format."""
    return str(Fraction(value))


def as_rational(value: RationalLike) -> Fraction:
    """Convert an integer, a rational or rational text to a rational."""
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError('Expected int, Fraction or str, not {}.'.format(type(value).__name__))
    return Fraction(value)


def is_integer(value: Union[int, Fraction]) -> bool:
    """Check whether a rational is an integer."""
    return Fraction(value).denominator == 1


def is_nonpositive_integer(value: Union[int, Fraction]) -> bool:
    """Check whether a rational belongs to {0, -1, -2, ...}."""
    return is_integer(value) and value <= 0


def is_nonnegative_integer(value: Union[int, Fraction]) -> bool:
    """Check whether a rational belongs to {0, 1, 2, ...}."""
    return is_integer(value) and value >= 0


def pochhammer(a: Union[int, Fraction], n: int) -> Fraction:
    """
    Compute the Pochhammer symbol (rising factorial).

    :param a: The base.
    :param n: A non-negative integer.
    :return: 1 if n = 0, else a (a+1) ... (a+n-1).
    :raise DomainError: If n is negative.
    """
    if n < 0:
        raise DomainError('Pochhammer index must be non-negative, got {}.'.format(n))
    result = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        result *= a + i
        if not result:
            break
    return result


def factorial(n: int) -> Fraction:
    """Compute n! as a rational."""
    if n < 0:
        raise DomainError('Factorial of a negative integer {}.'.format(n))
    return Fraction(math.factorial(n))


def reciprocal_factorial(n: int) -> Fraction:
    """Compute 1/n!, which is zero for negative n."""
    return Fraction(0) if n < 0 else 1 / factorial(n)


def binomial(x: Union[int, Fraction], k: int) -> Fraction:
    """Compute the generalized binomial coefficient x(x-1)...(x-k+1)/k!."""
    if k < 0:
        return Fraction(0)
    return pochhammer(Fraction(x) - k + 1, k) / factorial(k)


def rational_pow(x: Union[int, Fraction], k: int) -> Fraction:
    """
    Compute an exact integer power.

    :raise DomainError: If the base is zero and the exponent negative.
    """
    x = Fraction(x)
    if not x and k < 0:
        raise DomainError('Zero raised to a negative power {}.'.format(k))
    return x ** k
