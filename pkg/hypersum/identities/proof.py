"""
Verifiers of the series identities that lead to the closed evaluation.

A pole of 2F1(alpha, 1+gamma; gamma; x) at gamma = -k is resolved exactly by the
cancellation (1+gamma)_n / (gamma)_n = (gamma+n)/gamma, so every step is a finite
statement about truncated series or terminating sums.
"""
import logging
from fractions import Fraction

from hypersum.constants import DEFAULT_EPS, Classification, IdentityId, Lmm3Mode
from hypersum.errors import DomainError
from hypersum.exact_arith import (RationalLike, as_rational, factorial, format_rational, is_integer,
                                  is_nonpositive_integer, pochhammer, rational_pow)
from hypersum.hyper_eval import HGParams, classify, eval_convergent, eval_terminating, terminating_series
from hypersum.identities.models import IdentityInstance, IdentityReport
from hypersum.identities.theorem import rhs_gosper2
from hypersum.power_series import (TruncatedSeries, binomial_series, hg_series, linear_factor, lmm1_lhs_series,
                                   series_mul_poly, series_scale, series_shift)

LOGGER = logging.getLogger('hypersum.identities')

CONVERGENT_X_MAX = Fraction(3, 4)
"""Largest |x| at which the proof path encloses the strange evaluation."""


def verify_lmm1_series(alpha: RationalLike, gamma: RationalLike, order: int) -> IdentityReport:
    """
    Verify 2F1(alpha, 1+gamma; gamma; x) = (alpha x - gamma x + gamma)(1-x)^(-alpha-1)/gamma as series.

    :raise PoleError: If gamma = 0.
    """
    alpha, gamma = as_rational(alpha), as_rational(gamma)
    instance = IdentityInstance.create(
        IdentityId.LMM1, 'series of 2F1(alpha, 1+gamma; gamma; x)',
        '(gamma + (alpha-gamma)x)/gamma * series of (1-x)^(-alpha-1)', alpha=alpha, gamma=gamma, order=order)
    lhs = lmm1_lhs_series(alpha, gamma, order)
    rhs = series_scale(series_mul_poly(binomial_series(-alpha - 1, order), linear_factor(gamma, alpha - gamma)),
                       1 / gamma)
    return IdentityReport.series(instance, lhs, rhs)


def verify_lmm1_pointwise(alpha: int, gamma: RationalLike, x: RationalLike) -> IdentityReport:
    """
    Verify the same identity at a point for a non-positive integer alpha, where both sides are rational.

    The left side is summed with the Pochhammer symbols of both lower and upper parameters.

    :raise DomainError: If alpha is positive, gamma blocks the sum, or x = 1 with alpha = 0.
    """
    gamma, x = as_rational(gamma), as_rational(x)
    if alpha > 0:
        raise DomainError('alpha must be a non-positive integer, got {}.'.format(alpha))
    if not gamma:
        raise DomainError('gamma must be nonzero.')
    last = -alpha
    if is_nonpositive_integer(gamma) and gamma > -last:
        raise DomainError('gamma = {} makes (gamma)_n vanish for n <= {}.'.format(format_rational(gamma), last))
    instance = IdentityInstance.create(
        IdentityId.LMM1, 'finite sum of 2F1(alpha, 1+gamma; gamma; x)',
        '(alpha x - gamma x + gamma)(1-x)^(-alpha-1)/gamma', alpha=alpha, gamma=gamma, x=x)
    lhs = sum((pochhammer(alpha, n) * pochhammer(1 + gamma, n) / (pochhammer(gamma, n) * factorial(n))
               * rational_pow(x, n) for n in range(last + 1)), Fraction(0))
    rhs = (alpha * x - gamma * x + gamma) * rational_pow(1 - x, -alpha - 1) / gamma
    return IdentityReport.exact(instance, lhs, rhs)


def verify_lmm2(alpha: RationalLike, k: int, order: int) -> IdentityReport:
    """
    Verify the gamma = -k form of the previous identity as series.

    2F1(alpha, 1+gamma; gamma; x) at gamma = -k equals the extended terminating 2F1(alpha, 1-k; -k; x)
    minus (alpha)_(k+1) / (k (k+1)!) x^(k+1) 2F1(alpha+k+1, 2; k+2; x).

    :raise DomainError: If k < 1 or order < k + 2.
    """
    alpha = as_rational(alpha)
    if k < 1:
        raise DomainError('k must be a positive integer, got {}.'.format(k))
    if order < k + 2:
        raise DomainError('Series order {} is below k + 2 = {}.'.format(order, k + 2))
    instance = IdentityInstance.create(
        IdentityId.LMM2, 'series of 2F1(alpha, 1+gamma; gamma; x) at gamma = -k',
        'extended 2F1(alpha, 1-k; -k; x) - (alpha)_(k+1)/(k (k+1)!) x^(k+1) 2F1(alpha+k+1, 2; k+2; x)',
        alpha=alpha, k=k, order=order)
    lhs = lmm1_lhs_series(alpha, -k, order)
    tail = series_shift(TruncatedSeries(hg_series(alpha + k + 1, 2, k + 2, order - k - 1), order), k + 1)
    factor = pochhammer(alpha, k + 1) / (k * factorial(k + 1))
    rhs = terminating_series(alpha, 1 - k, -k, order) - series_scale(tail, factor)
    return IdentityReport.series(instance, lhs, rhs)


def verify_3tr1(a: RationalLike, b: RationalLike, c: RationalLike, order: int) -> IdentityReport:
    """
    Verify a contiguous relation of 2F1 as series.

    The relation is [c-2b+(b-a)x] F(a,b;c;x) + b(1-x) F(a,b+1;c;x) - (c-b) F(a,b-1;c;x) = 0.

    :raise PoleError: If c blocks a series below the order.
    """
    a, b, c = as_rational(a), as_rational(b), as_rational(c)
    instance = IdentityInstance.create(
        IdentityId.TR1, '[c-2b+(b-a)x] F(a,b;c;x) + b(1-x) F(a,b+1;c;x) - (c-b) F(a,b-1;c;x)', '0',
        a=a, b=b, c=c, order=order)
    lhs = (series_mul_poly(hg_series(a, b, c, order), linear_factor(c - 2 * b, b - a))
           + series_mul_poly(hg_series(a, b + 1, c, order), linear_factor(b, -b))
           - series_scale(hg_series(a, b - 1, c, order), c - b))
    return IdentityReport.series(instance, lhs, TruncatedSeries.zero(order))


def verify_3tr2(alpha: RationalLike, k: RationalLike, order: int) -> IdentityReport:
    """
    Verify [k-(alpha+k)x] F(alpha+k+1,1;k+2;x) + (1-x) F(alpha+k+1,2;k+2;x) = k+1 as series.

    :raise PoleError: If k + 2 blocks a series below the order.
    """
    alpha, k = as_rational(alpha), as_rational(k)
    instance = IdentityInstance.create(
        IdentityId.TR2, '[k-(alpha+k)x] F(alpha+k+1,1;k+2;x) + (1-x) F(alpha+k+1,2;k+2;x)', 'k+1',
        alpha=alpha, k=k, order=order)
    lhs = (series_mul_poly(hg_series(alpha + k + 1, 1, k + 2, order), linear_factor(k, -(alpha + k)))
           + series_mul_poly(hg_series(alpha + k + 1, 2, k + 2, order), linear_factor(1, -1)))
    return IdentityReport.series(instance, lhs, TruncatedSeries.constant(k + 1, order))


def rhs_lmm3(alpha: Fraction, k: Fraction) -> Fraction:
    """Return (alpha+k)(k+1)/alpha."""
    return (alpha + k) * (k + 1) / alpha


def _check_lmm3_domain(alpha: Fraction, k: Fraction) -> Fraction:
    if not alpha:
        raise DomainError('alpha must be nonzero.')
    if not alpha + k:
        raise DomainError('alpha + k must be nonzero, got alpha = {}, k = {}.'.format(
            format_rational(alpha), format_rational(k)))
    if is_integer(k) and k <= -2:
        raise DomainError('k must not be one of -2, -3, ..., got {}.'.format(format_rational(k)))
    return k / (alpha + k)


def verify_lmm3(alpha: RationalLike, k: RationalLike, mode: Lmm3Mode, eps: RationalLike = DEFAULT_EPS
                ) -> IdentityReport:
    """
    Verify 2F1(alpha+k+1, 2; k+2; k/(alpha+k)) = (alpha+k)(k+1)/alpha.

    :param mode: Terminating requires alpha + k + 1 to be a non-positive integer and compares exactly,
        convergent requires a non-terminating series with |k/(alpha+k)| < 1 and checks that the right side
        lies in an enclosure.
    :raise DomainError: If alpha = 0, alpha + k = 0, k is an integer <= -2 or the mode does not apply.
    """
    alpha, k = as_rational(alpha), as_rational(k)
    x = _check_lmm3_domain(alpha, k)
    params = HGParams.create(alpha + k + 1, 2, k + 2, x)
    instance = IdentityInstance.create(
        IdentityId.LMM3, '{} 2F1(alpha+k+1, 2; k+2; k/(alpha+k))'.format(mode.value), '(alpha+k)(k+1)/alpha',
        alpha=alpha, k=k)
    if mode is Lmm3Mode.TERMINATING:
        if not is_nonpositive_integer(alpha + k + 1):
            raise DomainError('Terminating mode requires alpha + k + 1 to be a non-positive integer.')
        return IdentityReport.exact(instance, eval_terminating(params), rhs_lmm3(alpha, k))
    classification = classify(params.a, params.b, params.c)
    if classification is not Classification.NON_TERMINATING:
        raise DomainError('Convergent mode requires a non-terminating series, got {}.'.format(classification.value))
    if abs(x) >= 1:
        raise DomainError('Convergent mode requires |k/(alpha+k)| < 1, got {}.'.format(format_rational(x)))
    return IdentityReport.enclosure(instance, eval_convergent(params, eps), rhs_lmm3(alpha, k))


def verify_gosper2_proofpath(alpha: RationalLike, k: int, order: int, eps: RationalLike = DEFAULT_EPS
                             ) -> IdentityReport:
    """
    Verify the closed evaluation along its proof.

    The steps are: the gamma = -k series identity, the vanishing of gamma + (alpha-gamma)x at
    gamma = -k and x = k/(alpha+k), an instance of the strange evaluation when it is evaluable here,
    and finally the terminating sum against the correction term assembled from the strange evaluation,
    which must also equal the closed right side.

    :raise DomainError: If alpha = 0, alpha + k = 0 or k < 1.
    """
    alpha = as_rational(alpha)
    if k < 1:
        raise DomainError('k must be a positive integer, got {}.'.format(k))
    x = _check_lmm3_domain(alpha, Fraction(k))
    instance = IdentityInstance.create(
        IdentityId.PROOFPATH, 'extended terminating 2F1(alpha, 1-k; -k; k/(alpha+k))',
        '(alpha)_(k+1)/(k (k+1)!) x^(k+1) (alpha+k)(k+1)/alpha', alpha=alpha, k=k, order=order)
    error = None
    if not verify_lmm2(alpha, k, order).equal:
        error = 'Series identity at gamma = -k fails.'
    elif linear_factor(-k, alpha + k)(x):
        error = 'Linear factor does not vanish at x = k/(alpha+k).'
    else:
        lmm3_mode = None
        if is_nonpositive_integer(alpha + k + 1):
            lmm3_mode = Lmm3Mode.TERMINATING
        elif abs(x) <= CONVERGENT_X_MAX and classify(alpha + k + 1, 2, k + 2) is Classification.NON_TERMINATING:
            lmm3_mode = Lmm3Mode.CONVERGENT
        if lmm3_mode is not None and not verify_lmm3(alpha, k, lmm3_mode, eps).equal:
            error = 'Strange evaluation fails in {} mode.'.format(lmm3_mode.value)
        else:
            LOGGER.debug('Strange evaluation at alpha = %s, k = %d checked in mode %s.', alpha, k, lmm3_mode)
    lhs = eval_terminating(HGParams.create(alpha, 1 - k, -k, x))
    correction = pochhammer(alpha, k + 1) / (k * factorial(k + 1)) * rational_pow(x, k + 1) * rhs_lmm3(alpha, k)
    if error is None and correction != rhs_gosper2(alpha, k):
        error = 'Correction term differs from (alpha+1)_k/k! (k/(alpha+k))^k.'
    return IdentityReport.exact(instance, lhs, correction, error)
