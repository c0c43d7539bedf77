import math
from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies

from hypersum.constants import Classification, EvalMode
from hypersum.errors import ClassificationError, DomainError, IllDefinedError, ParseError, ValidationError
from hypersum.exact_arith import pochhammer
from hypersum.hyper_eval import (EvalResult, HGParams, classify, eval_1f0, eval_convergent, eval_terminating, evaluate,
                                 partial_sums, tail_start_index, terminating_series, truncation_index)
from hypersum.power_series import TruncatedSeries

EPS = Fraction(1, 10 ** 12)
RATIONALS = strategies.fractions(max_denominator=8, min_value=-8, max_value=8)
NON_INTEGERS = RATIONALS.filter(lambda v: v.denominator != 1)
ARGUMENTS = strategies.fractions(min_value=Fraction(-9, 10), max_value=Fraction(9, 10), max_denominator=10)
OUTSIDE_DISK = strategies.builds(lambda magnitude, sign: sign * magnitude,
                                 strategies.fractions(min_value=1, max_value=20, max_denominator=10),
                                 strategies.sampled_from([1, -1]))


def direct_sum(a, b, c, x, last):
    return sum(pochhammer(a, n) * pochhammer(b, n) / (pochhammer(c, n) * math.factorial(n)) * x ** n
               for n in range(last + 1))


class TestHGParams(SimpleTestCase):
    def test_create(self):
        params = HGParams.create('-1/2', -1, Fraction(-2), '4/3')
        self.assertEqual(tuple(params), (Fraction(-1, 2), -1, -2, Fraction(4, 3)))
        params.validate()

    def test_str(self):
        self.assertEqual(str(HGParams.create('-1/2', -1, -2, '4/3')), '2F1(-1/2, -1; -2; 4/3)')

    def test_validate(self):
        self.assertRaises(ValidationError, HGParams(a=1, b=Fraction(1), c=Fraction(1), x=Fraction(0)).validate)


class TestEvalResult(SimpleTestCase):
    def test_exact(self):
        result = EvalResult.exact('4/3')
        self.assertIs(result.mode, EvalMode.EXACT)
        self.assertEqual(result.width, 0)
        self.assertTrue(result.contains(Fraction(4, 3)))
        self.assertFalse(result.contains(1))
        self.assertEqual(result.to_text(), '4/3')

    def test_enclosure(self):
        result = EvalResult.enclosure(Fraction(1, 3), Fraction(1, 2))
        self.assertIs(result.mode, EvalMode.ENCLOSURE)
        self.assertEqual(result.width, Fraction(1, 6))
        self.assertTrue(result.contains(Fraction(1, 3)))
        self.assertTrue(result.contains(Fraction(2, 5)))
        self.assertFalse(result.contains(1))
        self.assertEqual(result.to_text(), '[1/3, 1/2]')

    def test_validate(self):
        self.assertRaisesMessage(ValidationError, 'Lower bound exceeds the upper bound.',
                                 EvalResult.enclosure(1, 0).validate)
        self.assertRaises(ValidationError, EvalResult(mode=EvalMode.EXACT, value=None).validate)
        self.assertRaises(ValidationError, EvalResult(mode='exact', value=Fraction(1)).validate)

    def test_from_text(self):
        self.assertEqual(EvalResult.from_text('4/3'), EvalResult.exact(Fraction(4, 3)))
        self.assertEqual(EvalResult.from_text('[1/3, 1/2]'), EvalResult.enclosure(Fraction(1, 3), Fraction(1, 2)))

    def test_from_text_invalid(self):
        self.assertRaises(ParseError, EvalResult.from_text, '[1/2, 1/3]')
        self.assertRaisesMessage(ParseError, "Invalid enclosure: '[1]'.", EvalResult.from_text, '[1]')
        self.assertRaises(ParseError, EvalResult.from_text, 'x')


class TestClassify(SimpleTestCase):
    def test_standard_terminating(self):
        self.assertIs(classify(-3, Fraction(1, 2), Fraction(1, 3)), Classification.STANDARD_TERMINATING)
        self.assertIs(classify(1, 0, Fraction(1, 3)), Classification.STANDARD_TERMINATING)

    def test_extended_terminating(self):
        self.assertIs(classify(Fraction(-1, 2), -1, -2), Classification.EXTENDED_TERMINATING)
        self.assertIs(classify(0, 1, -5), Classification.EXTENDED_TERMINATING)

    def test_undefined(self):
        self.assertIs(classify(Fraction(1, 2), Fraction(1, 2), -1), Classification.UNDEFINED)
        # b = c does not qualify
        self.assertIs(classify(1, -2, -2), Classification.UNDEFINED)
        self.assertIs(classify(1, -3, -2), Classification.UNDEFINED)

    def test_non_terminating(self):
        self.assertIs(classify(Fraction(1, 2), Fraction(1, 2), Fraction(3, 2)), Classification.NON_TERMINATING)
        self.assertIs(classify(1, 1, 2), Classification.NON_TERMINATING)

    def test_is_terminating(self):
        self.assertTrue(Classification.STANDARD_TERMINATING.is_terminating)
        self.assertTrue(Classification.EXTENDED_TERMINATING.is_terminating)
        self.assertFalse(Classification.NON_TERMINATING.is_terminating)
        self.assertFalse(Classification.UNDEFINED.is_terminating)


class TestTruncationIndex(SimpleTestCase):
    def test_standard(self):
        self.assertEqual(truncation_index(-3, -5, Fraction(1, 2)), 3)

    def test_extended(self):
        self.assertEqual(truncation_index(Fraction(-1, 2), -1, -2), 1)
        self.assertEqual(truncation_index(-1, -2, -3), 1)
        # Only b > c qualifies
        self.assertEqual(truncation_index(-4, -1, -3), 1)

    def test_non_terminating(self):
        self.assertRaisesMessage(ClassificationError, '2F1(1/2, 1/2; 3/2; x) is non-terminating, not terminating.',
                                 truncation_index, Fraction(1, 2), Fraction(1, 2), Fraction(3, 2))


class TestTerminating(SimpleTestCase):
    def test_terminating_series(self):
        self.assertEqual(terminating_series(-2, 1, 1), TruncatedSeries([1, -2, 1]))
        self.assertEqual(terminating_series(-2, 1, 1, order=4), TruncatedSeries([1, -2, 1, 0, 0]))

    def test_extended_series(self):
        self.assertEqual(terminating_series(Fraction(-1, 2), -1, -2), TruncatedSeries([1, Fraction(-1, 4)]))

    def test_eval_extended(self):
        self.assertEqual(eval_terminating(HGParams.create('-1/2', -1, -2, '4/3')), Fraction(2, 3))

    def test_eval_zero_parameter(self):
        self.assertEqual(eval_terminating(HGParams.create(Fraction(1, 2), 0, Fraction(1, 3), 7)), 1)

    def test_eval_undefined(self):
        self.assertRaises(ClassificationError, eval_terminating, HGParams.create(1, 1, -1, 1))

    @given(strategies.integers(2, 12), strategies.data(), RATIONALS)
    def test_extended_truncation_invariance(self, m, data, x):
        # 2F1(-s, -t; -m; x) with s, t < m: terms past min(s, t) vanish through the numerator
        s, t = data.draw(strategies.integers(0, m - 1)), data.draw(strategies.integers(0, m - 1))
        value = eval_terminating(HGParams.create(-s, -t, -m, x))
        for last in (s, t, max(s, t), m):
            self.assertEqual(direct_sum(-s, -t, -m, x, last), value)

    @given(strategies.integers(0, 8), NON_INTEGERS, NON_INTEGERS)
    def test_chu_vandermonde(self, n, b, c):
        value = eval_terminating(HGParams.create(-n, b, c, 1))
        self.assertEqual(value, pochhammer(c - b, n) / pochhammer(c, n))

    @given(strategies.integers(0, 8), RATIONALS)
    def test_binomial_theorem(self, n, x):
        # 2F1(-n, b; b; x) = (1-x)^n
        self.assertEqual(eval_terminating(HGParams.create(-n, Fraction(1, 3), Fraction(1, 3), x)), (1 - x) ** n)


class TestTailStartIndex(SimpleTestCase):
    def test_quadratic(self):
        # q(n) = (n+1)(n-5)/4
        self.assertEqual(tail_start_index([Fraction(1), Fraction(1)], [Fraction(1)], Fraction(1, 2), Fraction(3, 4)), 5)

    def test_linear(self):
        self.assertEqual(tail_start_index([Fraction(1, 2)], [], Fraction(1, 2), Fraction(3, 4)), 2)

    @given(NON_INTEGERS, NON_INTEGERS, NON_INTEGERS, ARGUMENTS)
    def test_ratio_bounded(self, a, b, c, x):
        ratio = (1 + abs(x)) / 2
        start = tail_start_index([a, b], [c], x, ratio)
        for n in range(start, start + 20):
            self.assertLessEqual(abs(x * (a + n) * (b + n) / ((c + n) * (n + 1))), ratio)


class TestEvalConvergent(SimpleTestCase):
    def test_geometric(self):
        # 2F1(1, b; b; x) = 1/(1-x)
        result = eval_convergent(HGParams.create(1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 2)), EPS)
        self.assertIs(result.mode, EvalMode.ENCLOSURE)
        self.assertTrue(result.contains(2))
        self.assertLessEqual(result.width, EPS)

    def test_negative_argument(self):
        result = eval_convergent(HGParams.create(2, Fraction(1, 3), Fraction(1, 3), Fraction(-1, 2)), EPS)
        self.assertTrue(result.contains(Fraction(4, 9)))

    def test_logarithm(self):
        # 2F1(1, 1; 2; 1/2) = 2 log 2
        result = eval_convergent(HGParams.create(1, 1, 2, Fraction(1, 2)), EPS)
        approximation = Fraction(2 * math.log(2))
        self.assertLessEqual(result.lo - Fraction(1, 10 ** 14), approximation)
        self.assertLessEqual(approximation, result.hi + Fraction(1, 10 ** 14))

    def test_zero_argument(self):
        self.assertEqual(eval_convergent(HGParams.create(1, 1, 2, 0), EPS), EvalResult.enclosure(1, 1))

    def test_outside_disk(self):
        with self.assertRaisesMessage(IllDefinedError, 'ill-defined'):
            eval_convergent(HGParams.create(Fraction(1, 2), Fraction(1, 2), Fraction(3, 2), 1), EPS)
        self.assertRaises(IllDefinedError, eval_convergent, HGParams.create(1, 1, 2, Fraction(-3, 2)), EPS)

    def test_invalid_eps(self):
        self.assertRaisesMessage(DomainError, 'Tolerance must be positive, got 0.', eval_convergent,
                                 HGParams.create(1, 1, 2, Fraction(1, 2)), 0)

    def test_terminating(self):
        self.assertRaises(ClassificationError, eval_convergent, HGParams.create(-1, 1, 2, Fraction(1, 2)), EPS)

    @settings(max_examples=100, deadline=None)
    @given(NON_INTEGERS, NON_INTEGERS, NON_INTEGERS, strategies.fractions(Fraction(-1, 2), Fraction(1, 2), max_denominator=10))
    def test_enclosures_are_nested(self, a, b, c, x):
        params = HGParams.create(a, b, c, x)
        coarse = eval_convergent(params, Fraction(1, 10 ** 3))
        fine = eval_convergent(params, Fraction(1, 10 ** 9))
        self.assertLessEqual(coarse.lo, fine.lo)
        self.assertLessEqual(fine.hi, coarse.hi)
        self.assertLessEqual(fine.width, Fraction(1, 10 ** 9))

    @settings(max_examples=100)
    @given(NON_INTEGERS, NON_INTEGERS, NON_INTEGERS, OUTSIDE_DISK)
    def test_ill_defined_outside_disk(self, a, b, c, x):
        params = HGParams.create(a, b, c, x)
        self.assertRaisesMessage(IllDefinedError, 'ill-defined', eval_convergent, params, EPS)
        self.assertRaises(IllDefinedError, evaluate, params, EPS)


class TestEval1F0(SimpleTestCase):
    def test_terminating(self):
        self.assertEqual(eval_1f0(-2, 3), EvalResult.exact(4))
        self.assertEqual(eval_1f0(0, 5), EvalResult.exact(1))

    def test_convergent(self):
        result = eval_1f0(Fraction(1, 2), Fraction(1, 2), EPS)
        # (1/2)^(-1/2) = sqrt(2)
        self.assertLessEqual(result.lo ** 2, 2)
        self.assertGreaterEqual(result.hi ** 2, 2)
        self.assertLessEqual(result.width, EPS)

    def test_outside_disk(self):
        self.assertRaises(IllDefinedError, eval_1f0, Fraction(1, 2), 1)


class TestEvaluate(SimpleTestCase):
    def test_terminating(self):
        self.assertEqual(evaluate(HGParams.create('-1/2', -1, -2, '4/3')), EvalResult.exact(Fraction(2, 3)))

    def test_non_terminating(self):
        result = evaluate(HGParams.create(1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 2)), EPS)
        self.assertTrue(result.contains(2))

    def test_undefined(self):
        self.assertRaisesMessage(ClassificationError, 'is undefined', evaluate,
                                 HGParams.create(Fraction(1, 2), Fraction(1, 2), -1, Fraction(1, 2)))


class TestPartialSums(SimpleTestCase):
    def test_geometric(self):
        params = HGParams.create(1, Fraction(1, 3), Fraction(1, 3), Fraction(1, 2))
        self.assertEqual(partial_sums(params, 3), [1, Fraction(3, 2), Fraction(7, 4)])
