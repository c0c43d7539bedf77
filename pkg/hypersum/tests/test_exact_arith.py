from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, strategies

from hypersum.errors import DomainError, ParseError
from hypersum.exact_arith import (as_rational, binomial, factorial, format_rational, is_integer,
                                  is_nonnegative_integer, is_nonpositive_integer, parse_rational, pochhammer,
                                  rational_pow, reciprocal_factorial)

RATIONALS = strategies.fractions(max_denominator=1000)


class TestParseRational(SimpleTestCase):
    def test_integer(self):
        self.assertEqual(parse_rational('3'), Fraction(3))
        self.assertEqual(parse_rational('-3'), Fraction(-3))

    def test_fraction(self):
        self.assertEqual(parse_rational('-22/7'), Fraction(-22, 7))
        self.assertEqual(parse_rational('4/6'), Fraction(2, 3))

    def test_unicode_minus(self):
        self.assertEqual(parse_rational('−1/2'), Fraction(-1, 2))

    def test_whitespace(self):
        self.assertEqual(parse_rational(' 1/2 '), Fraction(1, 2))

    def test_zero_denominator(self):
        self.assertRaisesMessage(ParseError, "Zero denominator: '1/0'.", parse_rational, '1/0')

    def test_invalid(self):
        for text in ('', 'x', '1/', '/2', '1.5', '1/-2', '--1', '1 / 2'):
            with self.subTest(text=text):
                self.assertRaises(ParseError, parse_rational, text)

    @given(RATIONALS)
    def test_format_parse(self, value):
        self.assertEqual(parse_rational(format_rational(value)), value)


class TestFormatRational(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_rational(Fraction(4, 6)), '2/3')
        self.assertEqual(format_rational(Fraction(-3)), '-3')
        self.assertEqual(format_rational(0), '0')


class TestAsRational(SimpleTestCase):
    def test_convert(self):
        self.assertEqual(as_rational(2), Fraction(2))
        self.assertEqual(as_rational(Fraction(1, 3)), Fraction(1, 3))
        self.assertEqual(as_rational('1/3'), Fraction(1, 3))

    def test_invalid_type(self):
        self.assertRaisesMessage(TypeError, 'Expected int, Fraction or str, not float.', as_rational, 0.5)
        self.assertRaises(TypeError, as_rational, True)


class TestIntegerPredicates(SimpleTestCase):
    def test_is_integer(self):
        self.assertTrue(is_integer(Fraction(4, 2)))
        self.assertFalse(is_integer(Fraction(1, 2)))

    def test_is_nonpositive_integer(self):
        self.assertTrue(is_nonpositive_integer(0))
        self.assertTrue(is_nonpositive_integer(Fraction(-3)))
        self.assertFalse(is_nonpositive_integer(1))
        self.assertFalse(is_nonpositive_integer(Fraction(-1, 2)))

    def test_is_nonnegative_integer(self):
        self.assertTrue(is_nonnegative_integer(0))
        self.assertTrue(is_nonnegative_integer(5))
        self.assertFalse(is_nonnegative_integer(-1))
        self.assertFalse(is_nonnegative_integer(Fraction(1, 2)))


class TestPochhammer(SimpleTestCase):
    def test_values(self):
        self.assertEqual(pochhammer(Fraction(1, 2), 0), 1)
        self.assertEqual(pochhammer(Fraction(1, 2), 3), Fraction(15, 8))
        self.assertEqual(pochhammer(1, 5), 120)
        self.assertEqual(pochhammer(-2, 2), 2)

    def test_vanishes_past_nonpositive_integer(self):
        self.assertEqual(pochhammer(-2, 3), 0)
        self.assertEqual(pochhammer(-2, 10), 0)

    def test_negative_index(self):
        self.assertRaisesMessage(DomainError, 'Pochhammer index must be non-negative, got -1.', pochhammer, 1, -1)

    @given(RATIONALS, strategies.integers(min_value=0, max_value=20))
    def test_recurrence(self, a, n):
        self.assertEqual(pochhammer(a, n + 1), pochhammer(a, n) * (a + n))

    @given(RATIONALS, strategies.integers(0, 30), strategies.integers(0, 30))
    def test_additivity(self, a, m, n):
        self.assertEqual(pochhammer(a, m + n), pochhammer(a, m) * pochhammer(a + m, n))

    @given(strategies.one_of(strategies.integers(-40, 5).map(Fraction), RATIONALS), strategies.integers(0, 30))
    def test_vanishes_exactly_at_nonpositive_integers(self, a, n):
        # (a)_n = 0 iff a is one of 0, -1, ..., -(n-1)
        self.assertEqual(pochhammer(a, n) == 0, is_nonpositive_integer(a) and a > -n)


class TestFactorials(SimpleTestCase):
    def test_factorial(self):
        self.assertEqual(factorial(0), 1)
        self.assertEqual(factorial(6), 720)
        self.assertRaises(DomainError, factorial, -1)

    def test_reciprocal_factorial(self):
        self.assertEqual(reciprocal_factorial(3), Fraction(1, 6))
        self.assertEqual(reciprocal_factorial(-1), 0)

    def test_binomial(self):
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(Fraction(-1, 2), 2), Fraction(3, 8))
        self.assertEqual(binomial(3, 5), 0)
        self.assertEqual(binomial(3, -1), 0)


class TestRationalPow(SimpleTestCase):
    def test_pow(self):
        self.assertEqual(rational_pow(Fraction(2, 3), 3), Fraction(8, 27))
        self.assertEqual(rational_pow(Fraction(2, 3), -2), Fraction(9, 4))
        self.assertEqual(rational_pow(0, 0), 1)

    def test_zero_negative_power(self):
        self.assertRaisesMessage(DomainError, 'Zero raised to a negative power -1.', rational_pow, 0, -1)
