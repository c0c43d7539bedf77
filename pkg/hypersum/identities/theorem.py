"""
Verifiers of the closed evaluation of 2F1(alpha, 1-k; -k; k/(alpha+k)) and its special cases.

The left sides are always summed term by term through the extended terminating
evaluator, the right sides come from closed forms.
"""
import logging
from fractions import Fraction
from typing import List

from hypersum.constants import Case1Branch, Case2Branch, IdentityId, ReportMode
from hypersum.errors import CertificateError, DomainError
from hypersum.exact_arith import (RationalLike, as_rational, factorial, format_rational, pochhammer,
                                  rational_pow)
from hypersum.gosper import algorithm_term, closed_antidifference, definite_sum_via_certificate, gosper_summable
from hypersum.hyper_eval import HGParams, eval_1f0, eval_terminating
from hypersum.identities.models import IdentityInstance, IdentityReport

LOGGER = logging.getLogger('hypersum.identities')

CASE1_OFFSETS = {
    Case1Branch.INTEGER: Fraction(-1),
    Case1Branch.THIRD: Fraction(-1, 3),
    Case1Branch.TWO_THIRDS: Fraction(-2, 3),
}
CASE2_OFFSETS = {
    Case2Branch.INTEGER: Fraction(-1),
    Case2Branch.QUARTER: Fraction(-1, 4),
    Case2Branch.HALF: Fraction(-1, 2),
    Case2Branch.THREE_QUARTERS: Fraction(-3, 4),
}


def _check_theorem_domain(alpha: Fraction, k: int) -> Fraction:
    if k < 1:
        raise DomainError('k must be a positive integer, got {}.'.format(k))
    if not alpha + k:
        raise DomainError('alpha + k must be nonzero, got alpha = {}, k = {}.'.format(format_rational(alpha), k))
    return Fraction(k) / (alpha + k)


def rhs_gosper2(alpha: RationalLike, k: int) -> Fraction:
    """
    Return (alpha+1)_k / k! * (k/(alpha+k))^k.

    :raise DomainError: If alpha + k = 0 or k < 1.
    """
    alpha = as_rational(alpha)
    x = _check_theorem_domain(alpha, k)
    return pochhammer(alpha + 1, k) / factorial(k) * rational_pow(x, k)


def verify_gosper2(alpha: RationalLike, k: int) -> IdentityReport:
    """
    Verify 2F1(alpha, 1-k; -k; k/(alpha+k)) = (alpha+1)_k / k! * (k/(alpha+k))^k.

    :raise DomainError: If alpha + k = 0 or k < 1.
    """
    alpha = as_rational(alpha)
    x = _check_theorem_domain(alpha, k)
    instance = IdentityInstance.create(
        IdentityId.GOSPER2, 'extended terminating 2F1(alpha, 1-k; -k; k/(alpha+k))',
        '(alpha+1)_k/k! (k/(alpha+k))^k', alpha=alpha, k=k)
    lhs = eval_terminating(HGParams.create(alpha, 1 - k, -k, x))
    return IdentityReport.exact(instance, lhs, rhs_gosper2(alpha, k))


def rhs_case1(branch: Case1Branch, m: int) -> Fraction:
    """Return the tabulated value of 2F1(a, 3a+1; 3a; 3/2) for the branch and m."""
    if branch is Case1Branch.INTEGER:
        return Fraction(0)
    sign = rational_pow(-3, 3 * m)
    if branch is Case1Branch.THIRD:
        return (sign * pochhammer(Fraction(1, 3), m) * pochhammer(Fraction(5, 3), 2 * m)
                / (rational_pow(2, 3 * m) * pochhammer(2, 3 * m)))
    return (sign * pochhammer(Fraction(2, 3), m) * pochhammer(Fraction(7, 3), 2 * m)
            / (rational_pow(2, 3 * m + 1) * pochhammer(3, 3 * m)))


def rhs_case2(branch: Case2Branch, m: int) -> Fraction:
    """Return the tabulated value of 2F1(a, 4a+1; 4a; 4/3) for the branch and m."""
    if branch is Case2Branch.INTEGER:
        return Fraction(0)
    sign = rational_pow(-1, m)
    if branch is Case2Branch.QUARTER:
        return (sign * rational_pow(2, 8 * m) * pochhammer(Fraction(1, 4), m) * pochhammer(Fraction(7, 4), 3 * m)
                / (rational_pow(3, 4 * m) * pochhammer(2, 4 * m)))
    if branch is Case2Branch.HALF:
        return (sign * rational_pow(2, 8 * m + 1) * pochhammer(Fraction(1, 2), m)
                * pochhammer(Fraction(5, 2), 3 * m) / (rational_pow(3, 4 * m + 1) * pochhammer(3, 4 * m)))
    return (5 * sign * rational_pow(2, 8 * m - 1) * pochhammer(Fraction(3, 4), m)
            * pochhammer(Fraction(13, 4), 3 * m) / (rational_pow(3, 4 * m + 2) * pochhammer(4, 4 * m)))


def _verify_table_row(identity: IdentityId, q: int, branch_name: str, offset: Fraction, m: int,
                      rhs: Fraction) -> IdentityReport:
    if m < 0:
        raise DomainError('m must be non-negative, got {}.'.format(m))
    a = offset - m
    x = Fraction(q, q - 1)
    instance = IdentityInstance.create(
        identity, 'extended terminating 2F1(a, {0}a+1; {0}a; {1})'.format(q, format_rational(x)),
        'tabulated closed form, branch {}'.format(branch_name), a=a, m=m)
    lhs = eval_terminating(HGParams.create(a, q * a + 1, q * a, x))
    return IdentityReport.exact(instance, lhs, rhs)


def verify_case1(m: int) -> List[IdentityReport]:
    """Verify every branch of the 2F1(a, 3a+1; 3a; 3/2) table at m."""
    return [_verify_table_row(IdentityId.CASE1, 3, branch.value, offset, m, rhs_case1(branch, m))
            for branch, offset in CASE1_OFFSETS.items()]


def verify_case2(m: int) -> List[IdentityReport]:
    """Verify every branch of the 2F1(a, 4a+1; 4a; 4/3) table at m."""
    return [_verify_table_row(IdentityId.CASE2, 4, branch.value, offset, m, rhs_case2(branch, m))
            for branch, offset in CASE2_OFFSETS.items()]


def family_instance(q: int, j: int, m: int) -> IdentityReport:
    """
    Verify the specialization a = -j/q - m, k = j + q m.

    Then k = -q a and k/(a+k) = q/(q-1), so the left side is 2F1(a, qa+1; qa; q/(q-1)).

    :raise DomainError: Unless q >= 2, 1 <= j <= q and m >= 0.
    """
    if q < 2 or not 1 <= j <= q or m < 0:
        raise DomainError('Family requires q >= 2, 1 <= j <= q, m >= 0; got q = {}, j = {}, m = {}.'.format(q, j, m))
    a = Fraction(-j, q) - m
    k = j + q * m
    x = _check_theorem_domain(a, k)
    instance = IdentityInstance.create(
        IdentityId.FAMILY, 'extended terminating 2F1(a, {0}a+1; {0}a; {1})'.format(q, format_rational(x)),
        '(a+1)_k/k! (k/(a+k))^k', q=q, j=j, m=m, a=a, k=k)
    lhs = eval_terminating(HGParams.create(a, q * a + 1, q * a, x))
    return IdentityReport.exact(instance, lhs, rhs_gosper2(a, k))


def verify_algorithm(alpha: RationalLike, k: int, depth: int = 50) -> IdentityReport:
    """
    Verify the anti-difference of the summand of 2F1(alpha, 1-k; -k; k/(alpha+k)) found by Gosper's algorithm.

    The certificate identities are checked symbolically, f(n+1) - f(n) = t(n) for n = 0..depth,
    the engine anti-difference must differ from the closed form f(n) by one constant, and the
    telescoped sum over [0, k-1] is compared to the closed right side.

    :raise DomainError: If alpha + k = 0 or k < 1.
    """
    alpha = as_rational(alpha)
    _check_theorem_domain(alpha, k)
    instance = IdentityInstance.create(
        IdentityId.ALGORITHM, 'Gosper certificate sum over [0, k-1]', '(alpha+1)_k/k! (k/(alpha+k))^k',
        alpha=alpha, k=k, depth=depth)
    term = algorithm_term(alpha, k)
    certificate = gosper_summable(term)
    if certificate is None:
        return IdentityReport.failure(instance, ReportMode.EXACT, 'Summand is not Gosper-summable.')
    values = [certificate.antidifference(term, n) for n in range(depth + 2)]
    closed = [closed_antidifference(alpha, k, n) for n in range(depth + 2)]
    error = None
    for n in range(depth + 1):
        if values[n + 1] - values[n] != term.value(n):
            error = 'Telescoping fails at n = {}.'.format(n)
            break
        if closed[n + 1] - closed[n] != term.value(n):
            error = 'Closed anti-difference fails to telescope at n = {}.'.format(n)
            break
    if error is None and len({f - g for f, g in zip(values, closed)}) != 1:
        error = 'Anti-difference differs from the closed form by more than a constant.'
    total = definite_sum_via_certificate(term, 0, k - 1, certificate)
    LOGGER.debug('Gosper certificate of the summand at alpha = %s, k = %d: %s', alpha, k, certificate.certificate)
    return IdentityReport.exact(instance, total, rhs_gosper2(alpha, k), error)


def verify_binom(a: int, x: RationalLike) -> IdentityReport:
    """
    Verify 1F0(a; -; x) = (1-x)^(-a) for a non-positive integer a.

    :raise DomainError: If a is positive.
    """
    if a > 0:
        raise DomainError('Terminating 1F0 requires a non-positive integer, got {}.'.format(a))
    x = as_rational(x)
    instance = IdentityInstance.create(IdentityId.BINOM, 'finite sum of 1F0(a; -; x)', '(1-x)^(-a)', a=a, x=x)
    result = eval_1f0(a, x)
    if result.value is None:
        raise CertificateError('Terminating 1F0 did not produce an exact value.')
    return IdentityReport.exact(instance, result.value, rational_pow(1 - x, -a))
