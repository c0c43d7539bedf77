from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import assume, given, settings, strategies

from hypersum.errors import DomainError, ParseError, PoleError
from hypersum.exact_arith import is_nonpositive_integer, pochhammer
from hypersum.polynomials import Polynomial
from hypersum.power_series import (TruncatedSeries, binomial_series, hg_series, linear_factor, lmm1_lhs_series,
                                   pfq_series, series_add, series_mul, series_mul_poly, series_scale, series_shift,
                                   series_sub)

RATIONALS = strategies.fractions(max_denominator=12, min_value=-12, max_value=12)


class TestTruncatedSeries(SimpleTestCase):
    def test_padding(self):
        series = TruncatedSeries([1, 2], 3)
        self.assertEqual(series.coeffs, (1, 2, 0, 0))
        self.assertEqual(len(series), 4)

    def test_extra_coefficients_dropped(self):
        self.assertEqual(TruncatedSeries([1, 2, 3], 1).coeffs, (1, 2))

    def test_default_order(self):
        self.assertEqual(TruncatedSeries([1, 2, 3]).order, 2)

    def test_negative_order(self):
        self.assertRaisesMessage(DomainError, 'Series order must be non-negative, got -1.', TruncatedSeries, [])

    def test_constructors(self):
        self.assertTrue(TruncatedSeries.zero(3).is_zero)
        self.assertEqual(TruncatedSeries.constant(5, 2).coeffs, (5, 0, 0))
        self.assertEqual(TruncatedSeries.from_polynomial(Polynomial((1, 0, 1)), 1).coeffs, (1, 0))

    def test_from_text(self):
        self.assertEqual(TruncatedSeries.from_text('1, -1/2, 0'), TruncatedSeries([1, Fraction(-1, 2), 0]))

    def test_from_text_invalid(self):
        self.assertRaisesMessage(ParseError, 'Empty series.', TruncatedSeries.from_text, '')
        self.assertRaises(ParseError, TruncatedSeries.from_text, '1, x')

    def test_to_text(self):
        self.assertEqual(TruncatedSeries([1, Fraction(-1, 2)], 2).to_text(), '1, -1/2, 0')

    def test_equal(self):
        self.assertEqual(TruncatedSeries([1], 2), TruncatedSeries([1, 0, 0]))
        self.assertNotEqual(TruncatedSeries([1], 2), TruncatedSeries([1], 3))
        self.assertNotEqual(TruncatedSeries([1]), (1,))

    def test_truncate(self):
        self.assertEqual(TruncatedSeries([1, 2, 3]).truncate(1), TruncatedSeries([1, 2]))
        self.assertEqual(TruncatedSeries([1, 2]).truncate(5), TruncatedSeries([1, 2]))

    def test_evaluate(self):
        self.assertEqual(TruncatedSeries([1, 1, 1]).evaluate(Fraction(1, 2)), Fraction(7, 4))

    def test_indexing(self):
        series = TruncatedSeries([1, 2, 3])
        self.assertEqual(series[1], 2)
        self.assertEqual(list(series), [1, 2, 3])

    def test_repr(self):
        self.assertEqual(repr(TruncatedSeries([1, Fraction(1, 2)])), 'TruncatedSeries([1, 1/2], order=1)')


class TestArithmetic(SimpleTestCase):
    def test_add_common_order(self):
        self.assertEqual(series_add(TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 1])), TruncatedSeries([2, 3]))
        self.assertEqual(TruncatedSeries([1, 2]) + TruncatedSeries([1, 1]), TruncatedSeries([2, 3]))

    def test_sub(self):
        self.assertEqual(series_sub(TruncatedSeries([1, 2]), TruncatedSeries([1, 1])), TruncatedSeries([0, 1]))
        self.assertEqual(-TruncatedSeries([1, -2]), TruncatedSeries([-1, 2]))

    def test_scale(self):
        self.assertEqual(series_scale(TruncatedSeries([1, 2]), Fraction(1, 2)), TruncatedSeries([Fraction(1, 2), 1]))

    def test_mul(self):
        geometric = TruncatedSeries([1, 1, 1, 1])
        self.assertEqual(series_mul(geometric, TruncatedSeries([1, -1], 3)), TruncatedSeries.constant(1, 3))
        self.assertEqual(series_mul(geometric, geometric), TruncatedSeries([1, 2, 3, 4]))

    def test_mul_poly(self):
        self.assertEqual(series_mul_poly(TruncatedSeries([1, 1, 1]), linear_factor(1, -1)),
                         TruncatedSeries.constant(1, 2))

    def test_shift(self):
        self.assertEqual(series_shift(TruncatedSeries([1, 2, 3]), 2), TruncatedSeries([0, 0, 1]))
        self.assertEqual(series_shift(TruncatedSeries([1, 2]), 0), TruncatedSeries([1, 2]))

    def test_shift_negative(self):
        self.assertRaisesMessage(DomainError, 'Negative power of x: -1.', series_shift, TruncatedSeries([1]), -1)

    def test_linear_factor(self):
        self.assertEqual(linear_factor(2, -3), Polynomial((2, -3)))


class TestHypergeometricSeries(SimpleTestCase):
    def test_exponential(self):
        self.assertEqual(pfq_series([], [], 3), TruncatedSeries([1, 1, Fraction(1, 2), Fraction(1, 6)]))

    def test_logarithm(self):
        # 2F1(1, 1; 2; x) = -log(1-x)/x
        self.assertEqual(hg_series(1, 1, 2, 4),
                         TruncatedSeries([1, Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)]))

    def test_terminating(self):
        # 2F1(-2, 1; 1; x) = (1-x)^2
        self.assertEqual(hg_series(-2, 1, 1, 4), TruncatedSeries([1, -2, 1, 0, 0]))

    def test_order_zero(self):
        self.assertEqual(hg_series(1, 1, -1, 0), TruncatedSeries([1]))

    def test_blocked(self):
        self.assertRaisesMessage(PoleError, 'Lower parameter -1 blocks the series at index 2.', hg_series, 1, 1, -1, 3)

    def test_binomial(self):
        self.assertEqual(binomial_series(-1, 3), TruncatedSeries([1, 1, 1, 1]))
        self.assertEqual(binomial_series(2, 3), TruncatedSeries([1, -2, 1, 0]))
        self.assertEqual(binomial_series(Fraction(1, 2), 2), TruncatedSeries([1, Fraction(-1, 2), Fraction(-1, 8)]))

    @given(RATIONALS, RATIONALS)
    def test_binomial_exponents_add(self, e, f):
        self.assertEqual(series_mul(binomial_series(e, 8), binomial_series(f, 8)), binomial_series(e + f, 8))

    @given(RATIONALS, RATIONALS, RATIONALS.filter(lambda c: c.denominator != 1))
    def test_symmetric_in_upper_parameters(self, a, b, c):
        self.assertEqual(hg_series(a, b, c, 8), hg_series(b, a, c, 8))


class TestLmm1LhsSeries(SimpleTestCase):
    def test_gamma_one(self):
        # 2F1(1, 2; 1; x) = 1/(1-x)^2
        self.assertEqual(lmm1_lhs_series(1, 1, 3), TruncatedSeries([1, 2, 3, 4]))

    def test_blocked_gamma(self):
        alpha = Fraction(1, 2)
        series = lmm1_lhs_series(alpha, -1, 2)
        self.assertEqual(series, TruncatedSeries([1, 0, -alpha * (alpha + 1) / 2]))

    @given(RATIONALS, RATIONALS.filter(lambda g: g.denominator != 1))
    def test_agrees_with_hg_series(self, alpha, gamma):
        self.assertEqual(lmm1_lhs_series(alpha, gamma, 8), hg_series(alpha, 1 + gamma, gamma, 8))

    def test_gamma_zero(self):
        self.assertRaisesMessage(PoleError, 'Lower parameter gamma must be nonzero.', lmm1_lhs_series, 1, 0, 3)

    @settings(max_examples=500)
    @given(RATIONALS.filter(bool), strategies.integers(1, 30))
    def test_cancellation(self, gamma, n):
        assume(not is_nonpositive_integer(gamma) or gamma <= -n)
        self.assertEqual(pochhammer(1 + gamma, n) / pochhammer(gamma, n), (gamma + n) / gamma)
        self.assertEqual(pochhammer(1 + gamma, n - 1) * (gamma + n), pochhammer(1 + gamma, n))
        self.assertEqual(lmm1_lhs_series(1, gamma, n)[n], (gamma + n) / gamma)
