"""
Univariate polynomials and rational functions over exact rationals.

Polynomials are immutable wrappers of ``sympy.Poly`` in the variable ``n`` over ``QQ``.
Coefficients are exchanged as ``fractions.Fraction``, constant term first, without trailing zeros.
"""
import logging
import math
from fractions import Fraction
from functools import reduce
from itertools import chain
from typing import Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

from sympy import QQ, Matrix, Poly, Rational, Symbol
from sympy.polys.polyerrors import ExactQuotientFailed
from sympy.polys.polyfuncs import interpolate as interpolate_points

from hypersum.errors import CertificateError, DomainError, ParseError, PoleError
from hypersum.exact_arith import RationalLike, as_rational, format_rational, is_integer, parse_rational

LOGGER = logging.getLogger('hypersum.polynomials')

Degree = Union[int, float]
NEG_INFINITY = float('-inf')
"""Degree of the zero polynomial, less than every integer."""

Scalar = Union[int, Fraction]

VARIABLE = Symbol('n')

HALF = Rational(1, 2)


def to_sympy(value: RationalLike) -> Rational:
    """Convert an exact rational to a sympy rational."""
    value = as_rational(value)
    return Rational(value.numerator, value.denominator)


def from_sympy(value) -> Fraction:
    """Convert a sympy rational to an exact rational."""
    return Fraction(int(value.p), int(value.q))


class Polynomial:
    """
    Immutable univariate polynomial with rational coefficients.

    :param coefficients: Coefficients indexed by degree (constant term first).
    """

    __slots__ = ('_poly', '_coefficients')

    def __init__(self, coefficients: Iterable[RationalLike] = ()) -> None:
        high_first = [to_sympy(c) for c in coefficients][::-1] or [Rational(0)]
        self._poly = Poly.from_list(high_first, VARIABLE, domain=QQ)
        self._coefficients = None  # type: Optional[Tuple[Fraction, ...]]

    @classmethod
    def from_poly(cls, poly: Poly) -> 'Polynomial':
        """Wrap a sympy polynomial in n."""
        result = cls.__new__(cls)
        result._poly = poly.set_domain(QQ)
        result._coefficients = None
        return result

    @classmethod
    def constant(cls, value: RationalLike) -> 'Polynomial':
        """Create a constant polynomial."""
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coefficient: RationalLike = 1) -> 'Polynomial':
        """Create the polynomial coefficient * n^degree."""
        return cls([0] * degree + [coefficient])

    @classmethod
    def linear(cls, root: RationalLike) -> 'Polynomial':
        """Create the monic polynomial n - root."""
        return cls((-as_rational(root), 1))

    @classmethod
    def from_text(cls, text: str) -> 'Polynomial':
        """
        Parse a polynomial in text format.

        :param text: Comma-separated constant-first coefficients ("-1,0,1" for n^2 - 1).
        :raise ParseError: If the text is malformed.
        """
        if not text.strip():
            raise ParseError('Empty polynomial.')
        return cls(parse_rational(item) for item in text.split(','))

    @property
    def poly(self) -> Poly:
        """The sympy polynomial."""
        return self._poly

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """Coefficients indexed by degree."""
        if self._coefficients is None:
            values = [] if self._poly.is_zero else self._poly.all_coeffs()
            self._coefficients = tuple(from_sympy(c) for c in reversed(values))
        return self._coefficients

    @property
    def degree(self) -> Degree:
        """The degree, NEG_INFINITY for the zero polynomial."""
        return NEG_INFINITY if self._poly.is_zero else int(self._poly.degree())

    @property
    def leading_coefficient(self) -> Fraction:
        """The leading coefficient, zero for the zero polynomial."""
        return from_sympy(self._poly.LC())

    @property
    def is_zero(self) -> bool:
        """Whether the polynomial is identically zero."""
        return bool(self._poly.is_zero)

    def coeff(self, index: Degree) -> Fraction:
        """Return the coefficient of n^index (zero outside the support)."""
        if isinstance(index, int) and 0 <= index < len(self.coefficients):
            return self.coefficients[index]
        return Fraction(0)

    def to_text(self) -> str:
        """Export the polynomial in text format."""
        return ','.join(format_rational(c) for c in self.coefficients) or '0'

    def __call__(self, value: RationalLike) -> Fraction:
        return from_sympy(self._poly.eval(to_sympy(value)))

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coefficients)

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __neg__(self) -> 'Polynomial':
        return Polynomial.from_poly(-self._poly)

    def __add__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        return Polynomial.from_poly(self._poly + _coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        return Polynomial.from_poly(self._poly - _coerce(other)._poly)

    def __rsub__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        return _coerce(other) - self

    def __mul__(self, other: Union['Polynomial', Scalar]) -> 'Polynomial':
        return Polynomial.from_poly(self._poly * _coerce(other)._poly)

    __rmul__ = __mul__

    def __divmod__(self, other: 'Polynomial') -> Tuple['Polynomial', 'Polynomial']:
        return poly_divmod(self, other)

    def scale(self, factor: RationalLike) -> 'Polynomial':
        """Multiply by a scalar."""
        return Polynomial.from_poly(self._poly.mul_ground(to_sympy(factor)))

    def monic(self) -> 'Polynomial':
        """Divide by the leading coefficient; the zero polynomial stays zero."""
        return self if self.is_zero else Polynomial.from_poly(self._poly.monic())

    def shift(self, j: int) -> 'Polynomial':
        """Return p(n + j)."""
        return shift(self, j)

    def __repr__(self) -> str:
        return '{}({!r})'.format(self.__class__.__name__, self.to_text())

    def __str__(self) -> str:
        terms = []
        for index in reversed(range(len(self.coefficients))):
            coefficient = self.coefficients[index]
            if not coefficient:
                continue
            magnitude = abs(coefficient)
            if index == 0:
                body = format_rational(magnitude)
            else:
                power = 'n' if index == 1 else 'n^{}'.format(index)
                body = power if magnitude == 1 else '{}*{}'.format(format_rational(magnitude), power)
            terms.append(('-' if coefficient < 0 else '+', body))
        if not terms:
            return '0'
        text = ('-' if terms[0][0] == '-' else '') + terms[0][1]
        return text + ''.join(' {} {}'.format(sign, body) for sign, body in terms[1:])


ZERO = Polynomial()
ONE = Polynomial.constant(1)
N = Polynomial((0, 1))


def _coerce(value: Union[Polynomial, Scalar]) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.constant(value)


def poly_product(factors: Iterable[Polynomial]) -> Polynomial:
    """Multiply polynomials together."""
    return reduce(lambda a, b: a * b, factors, ONE)


def poly_divmod(p: Polynomial, q: Polynomial) -> Tuple[Polynomial, Polynomial]:
    """
    Divide polynomials with remainder.

    :return: A quotient and a remainder of degree less than deg q.
    :raise DomainError: If q is the zero polynomial.
    """
    if q.is_zero:
        raise DomainError('Polynomial division by zero.')
    quotient, remainder = p.poly.div(q.poly)
    return Polynomial.from_poly(quotient), Polynomial.from_poly(remainder)


def exact_quotient(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Divide polynomials exactly.

    :raise DomainError: If q is the zero polynomial.
    :raise CertificateError: If q does not divide p.
    """
    if q.is_zero:
        raise DomainError('Polynomial division by zero.')
    try:
        return Polynomial.from_poly(p.poly.exquo(q.poly))
    except ExactQuotientFailed:
        raise CertificateError('{} does not divide {}.'.format(q, p)) from None


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """
    Compute the monic greatest common divisor.

    :raise DomainError: If both polynomials are zero.
    """
    if p.is_zero and q.is_zero:
        raise DomainError('GCD of two zero polynomials.')
    return Polynomial.from_poly(p.poly.gcd(q.poly)).monic()


def shift(p: Polynomial, j: int) -> Polynomial:
    """Expand p(n + j) exactly."""
    return p if not j else Polynomial.from_poly(p.poly.shift(j))


def resultant(p: Polynomial, q: Polynomial) -> Fraction:
    """Compute Res_n(p, q), zero if either polynomial is zero."""
    if p.is_zero or q.is_zero:
        return Fraction(0)
    return from_sympy(p.poly.resultant(q.poly))


def interpolate(points: Sequence[Tuple[RationalLike, RationalLike]]) -> Polynomial:
    """Return the polynomial of least degree through the given points."""
    data = [(to_sympy(x), to_sympy(y)) for x, y in points]
    return Polynomial.from_poly(Poly(interpolate_points(data, VARIABLE), VARIABLE, domain=QQ))


def root_bound(p: Polynomial) -> int:
    """
    Bound the absolute values of the roots of a nonzero polynomial (Cauchy bound).

    :return: An integer J such that every complex root z satisfies |z| <= J, zero for constants.
    """
    if p.degree < 1:
        return 0
    tail = p.monic().coefficients[:-1]
    return math.ceil(1 + max(abs(c) for c in tail))


def nonnegative_integer_roots(p: Polynomial) -> Set[int]:
    """
    Find the non-negative integer roots of a nonzero polynomial.

    Real roots above zero are isolated in intervals of width below 1/2, so each holds at most
    one integer candidate, which is checked exactly.

    :raise DomainError: If p is the zero polynomial.
    """
    if p.is_zero:
        raise DomainError('The zero polynomial has every root.')
    roots = set()  # type: Set[int]
    if not p.coeff(0):
        roots.add(0)
    if p.degree < 1:
        return roots
    for (low, high), _ in p.poly.intervals(eps=HALF, inf=0):
        for j in range(max(math.ceil(from_sympy(low)), 1), math.floor(from_sympy(high)) + 1):
            if not p(j):
                roots.add(j)
    return roots


def dispersion(p: Polynomial, q: Polynomial) -> Set[int]:
    """
    Compute the dispersion set {j >= 0 : deg gcd(p(n), q(n+j)) >= 1}.

    The resultant Res_n(p(n), q(n+j)) is a polynomial in j of degree at most deg p * deg q;
    it is evaluated at enough integer points, interpolated, and its non-negative integer roots returned.

    :raise DomainError: If either polynomial is zero.
    """
    if p.is_zero or q.is_zero:
        raise DomainError('Dispersion of a zero polynomial.')
    if p.degree < 1 or q.degree < 1:
        return set()
    bound = int(p.degree * q.degree)
    points = [(j, resultant(p, shift(q, j))) for j in range(bound + 1)]
    result = nonnegative_integer_roots(interpolate(points))
    LOGGER.debug('Dispersion of (%s, %s): %r', p, q, sorted(result))
    return result


def dispersion_bound(p: Polynomial, q: Polynomial) -> int:
    """Return J_max with every element of the dispersion set at most J_max, from the root bounds of p and q."""
    return root_bound(p) + root_bound(q)


def dispersion_max(p: Polynomial, q: Polynomial) -> Degree:
    """Return the largest element of the dispersion set, NEG_INFINITY if it is empty."""
    return max(dispersion(p, q), default=NEG_INFINITY)


def solve_linear_system(matrix: Sequence[Sequence[RationalLike]], rhs: Sequence[RationalLike]
                        ) -> Optional[List[Fraction]]:
    """
    Solve a rational linear system by exact Gauss-Jordan elimination.

    Free variables are set to zero.

    :return: A solution or None if the system is inconsistent.
    """
    if not matrix:
        return []
    system = Matrix([[to_sympy(v) for v in row] for row in matrix])
    try:
        solution, free = system.gauss_jordan_solve(Matrix([to_sympy(v) for v in rhs]))
    except ValueError:
        return None
    solution = solution.subs({symbol: 0 for symbol in free})
    return [from_sympy(value) for value in solution]


def gosper_degree_candidates(a: Polynomial, b_shifted: Polynomial, c: Polynomial) -> List[int]:
    """
    Return the degree candidates for a polynomial solution of a(n) x(n+1) - b(n-1) x(n) = c(n).

    :param a: The polynomial a(n).
    :param b_shifted: The polynomial b(n-1).
    :param c: The polynomial c(n).
    """
    plus = a + b_shifted
    minus = a - b_shifted
    if minus.degree >= plus.degree:
        candidates = [c.degree - minus.degree]
    else:
        candidates = [c.degree - plus.degree + 1]
        u = -2 * minus.coeff(plus.degree - 1) / plus.leading_coefficient
        if is_integer(u) and u >= 0:
            candidates.append(int(u))
    return [int(d) for d in candidates if d >= 0]


def _solve_for_degree(a: Polynomial, b_shifted: Polynomial, c: Polynomial, degree: int) -> Optional[Polynomial]:
    basis = [a * shift(Polynomial.monomial(i), 1) - b_shifted * Polynomial.monomial(i) for i in range(degree + 1)]
    degrees = [d for d in chain((c.degree,), (e.degree for e in basis)) if d != NEG_INFINITY]
    size = int(max(degrees, default=-1)) + 1
    matrix = [[e.coeff(m) for e in basis] for m in range(size)]
    solution = solve_linear_system(matrix, [c.coeff(m) for m in range(size)])
    if solution is None:
        return None
    x = Polynomial(solution)
    if a * shift(x, 1) - b_shifted * x != c:
        raise CertificateError('Gosper equation solution failed the exact check.')
    return x


def solve_gosper_equation(a: Polynomial, b: Polynomial, c: Polynomial) -> Optional[Polynomial]:
    """
    Solve a(n) x(n+1) - b(n-1) x(n) = c(n) for a polynomial x.

    The classical degree candidates are tried first, then every degree up to
    deg c + max(deg a, deg b) + 2.

    :return: A solution or None when no polynomial solution exists (not summable).
    """
    b_shifted = shift(b, -1)
    candidates = gosper_degree_candidates(a, b_shifted, c)
    fallback = int(max(c.degree, 0) + max(a.degree, b.degree, 0)) + 2
    LOGGER.debug('Gosper equation a=%s, b=%s, c=%s: degree candidates %r', a, b, c, candidates)
    for degree in chain(sorted(set(candidates), reverse=True),
                        (d for d in range(fallback + 1) if d not in candidates)):
        x = _solve_for_degree(a, b_shifted, c, degree)
        if x is not None:
            LOGGER.debug('Gosper equation solved with degree %d: x(n) = %s', degree, x)
            return x
    return None


class RationalFunction:
    """
    Rational function num/den in lowest terms with a monic denominator.

    :param num: The numerator.
    :param den: The denominator.
    :raise PoleError: If the denominator is the zero polynomial.
    """

    __slots__ = ('num', 'den')

    def __init__(self, num: Polynomial, den: Polynomial = ONE) -> None:
        if den.is_zero:
            raise PoleError('Rational function with a zero denominator.')
        if num.is_zero:
            num, den = ZERO, ONE
        else:
            common = poly_gcd(num, den)
            if common.degree > 0:
                num, den = exact_quotient(num, common), exact_quotient(den, common)
            lead = den.leading_coefficient
            num, den = num.scale(1 / lead), den.scale(1 / lead)
        self.num = num
        self.den = den

    @classmethod
    def from_text(cls, num: str, den: str) -> 'RationalFunction':
        """Parse a rational function from two polynomials in text format."""
        denominator = Polynomial.from_text(den)
        if denominator.is_zero:
            raise ParseError('Zero denominator polynomial: {!r}.'.format(den))
        return cls(Polynomial.from_text(num), denominator)

    @property
    def is_zero(self) -> bool:
        """Whether the function is identically zero."""
        return self.num.is_zero

    def __call__(self, value: RationalLike):
        denominator = self.den(value)
        if not denominator:
            raise PoleError('Pole of {} at {}.'.format(self, format_rational(as_rational(value))))
        return self.num(value) / denominator

    def is_regular_at(self, value: RationalLike) -> bool:
        """Whether the denominator does not vanish at the value."""
        return bool(self.den(value))

    def shift(self, j: int) -> 'RationalFunction':
        """Return r(n + j)."""
        return RationalFunction(shift(self.num, j), shift(self.den, j))

    def __neg__(self) -> 'RationalFunction':
        return RationalFunction(-self.num, self.den)

    def __add__(self, other: Union['RationalFunction', Polynomial, Scalar]) -> 'RationalFunction':
        other = _coerce_rational(other)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other: Union['RationalFunction', Polynomial, Scalar]) -> 'RationalFunction':
        return self + -_coerce_rational(other)

    def __mul__(self, other: Union['RationalFunction', Polynomial, Scalar]) -> 'RationalFunction':
        other = _coerce_rational(other)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Union['RationalFunction', Polynomial, Scalar]) -> 'RationalFunction':
        other = _coerce_rational(other)
        if other.is_zero:
            raise PoleError('Division by the zero rational function.')
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Polynomial, int, Fraction)):
            other = _coerce_rational(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return '{}({!r}, {!r})'.format(self.__class__.__name__, self.num, self.den)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return '({})/({})'.format(self.num, self.den)


def _coerce_rational(value: Union[RationalFunction, Polynomial, Scalar]) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction(_coerce(value))
