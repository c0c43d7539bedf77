"""Batch verification of identities over seeded parameter grids."""
import logging
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Dict, Iterator, List, Optional, Union

from hypersum.constants import IdentityId, Lmm3Mode, ReportMode
from hypersum.datamodels import DataModel
from hypersum.errors import HypersumError, ValidationError
from hypersum.exact_arith import as_rational, is_nonpositive_integer
from hypersum.identities.models import IdentityInstance, IdentityReport
from hypersum.identities.proof import (verify_3tr1, verify_3tr2, verify_gosper2_proofpath, verify_lmm1_pointwise,
                                       verify_lmm1_series, verify_lmm2, verify_lmm3)
from hypersum.identities.theorem import (family_instance, verify_algorithm, verify_binom, verify_case1, verify_case2,
                                         verify_gosper2)
from hypersum.settings import SETTINGS
from hypersum.utils import random_non_integer, random_rational, seeded_random

LOGGER = logging.getLogger('hypersum.identities')

Verdict = Union[IdentityReport, List[IdentityReport]]

REPORT_MODES = {
    IdentityId.LMM1: ReportMode.SERIES,
    IdentityId.LMM2: ReportMode.SERIES,
    IdentityId.TR1: ReportMode.SERIES,
    IdentityId.TR2: ReportMode.SERIES,
}

GRID_FIELDS = ['alpha_numerator_max', 'alpha_denominator_max', 'k_max', 'm_max', 'lmm3_k_max', 'lmm3_m_max',
               'family_q_max', 'family_m_max', 'random_draws', 'convergent_draws', 'algorithm_draws',
               'telescoping_depth']

ALGORITHM_K_MAX = 10
BINOM_A_MAX = 10


class VerifyConfig(DataModel):
    """Configuration of a verification run."""

    FIELDS = ['identities', 'order', 'eps', 'seed', 'workers'] + GRID_FIELDS + ['alpha', 'k', 'q', 'j']
    identities = None  # type: List[IdentityId]
    order = None  # type: int
    eps = None  # type: Fraction
    seed = None  # type: int
    workers = 1  # type: int
    alpha_numerator_max = None  # type: int
    alpha_denominator_max = None  # type: int
    k_max = None  # type: int
    m_max = None  # type: int
    lmm3_k_max = None  # type: int
    lmm3_m_max = None  # type: int
    family_q_max = None  # type: int
    family_m_max = None  # type: int
    random_draws = None  # type: int
    convergent_draws = None  # type: int
    algorithm_draws = None  # type: int
    telescoping_depth = None  # type: int
    alpha = None  # type: Optional[Fraction]
    """A single alpha instead of the grid."""
    k = None  # type: Optional[int]
    """A single k instead of the grid."""
    q = None  # type: Optional[int]
    """A single q of the family instead of the grid."""
    j = None  # type: Optional[int]
    """A single j of the family instead of the grid."""

    @classmethod
    def from_settings(cls, **overrides: Any) -> 'VerifyConfig':
        """
        Create a configuration from HYPERSUM_* settings; overrides that are None are ignored.

        :raise ValidationError: If the resulting configuration is invalid.
        """
        data = {
            'identities': [IdentityId(i) for i in SETTINGS.identities],
            'order': SETTINGS.series_order,
            'eps': SETTINGS.eps,
            'seed': SETTINGS.seed,
            'workers': SETTINGS.workers,
        }  # type: Dict[str, Any]
        for name in GRID_FIELDS:
            data[name] = getattr(SETTINGS, name)
        data.update((key, value) for key, value in overrides.items() if value is not None)
        config = cls(**data)
        config.validate()
        return config

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(list, 'identities', required=True)
        for identity in self.identities:
            if not isinstance(identity, IdentityId):
                raise ValidationError({'identities': 'Must be IdentityId, not {}.'.format(type(identity).__name__)})
        self.validate_fields(int, 'order', 'seed', 'workers', *GRID_FIELDS, required=True)
        self.validate_fields(Fraction, 'eps', required=True)
        self.validate_fields(Fraction, 'alpha', required=False)
        self.validate_fields(int, 'k', 'q', 'j', required=False)
        if self.order < 0:
            raise ValidationError({'order': 'Must be non-negative.'})
        if self.eps <= 0:
            raise ValidationError({'eps': 'Must be positive.'})
        if self.workers < 1:
            raise ValidationError({'workers': 'Must be at least 1.'})
        for name in GRID_FIELDS:
            if getattr(self, name) < 0:
                raise ValidationError({name: 'Must be non-negative.'})


class VerificationTask(DataModel):
    """A deferred verification of one grid point."""

    FIELDS = ['identity', 'params', 'function']
    identity = None  # type: IdentityId
    params = None  # type: Dict[str, Fraction]
    function = None  # type: Callable[[], Verdict]

    @classmethod
    def create(cls, identity: IdentityId, function: Callable[..., Verdict], **params: Any) -> 'VerificationTask':
        """Create a task calling the function with keyword arguments; the rational ones are recorded."""
        recorded = OrderedDict((name, as_rational(value)) for name, value in params.items()
                               if isinstance(value, (int, Fraction)) and not isinstance(value, bool))
        return cls(identity=identity, params=recorded, function=partial(function, **params))

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(IdentityId, 'identity', required=True)
        self.validate_fields(dict, 'params', required=True)

    def run(self) -> List[IdentityReport]:
        """Run the verification, recording an error as a failed report."""
        try:
            verdict = self.function()
        except HypersumError as e:
            LOGGER.warning('Verification of %s %r failed: %s', self.identity.value, dict(self.params), e)
            instance = IdentityInstance(identity=self.identity, params=self.params, lhs_plan='not evaluated',
                                        rhs_plan='not evaluated')
            return [IdentityReport.failure(instance, REPORT_MODES.get(self.identity, ReportMode.EXACT), str(e))]
        reports = verdict if isinstance(verdict, list) else [verdict]
        for report in reports:
            if not report.equal:
                LOGGER.warning('Identity does not hold: %s', report.instance)
        return reports


def alpha_grid(numerator_max: int, denominator_max: int) -> List[Fraction]:
    """Return the distinct rationals p/q with |p| <= numerator_max and 1 <= q <= denominator_max in order."""
    return sorted({Fraction(p, q) for q in range(1, denominator_max + 1)
                   for p in range(-numerator_max, numerator_max + 1)})


def _alphas(config: VerifyConfig) -> List[Fraction]:
    return [config.alpha] if config.alpha is not None else alpha_grid(config.alpha_numerator_max,
                                                                      config.alpha_denominator_max)


def _ks(config: VerifyConfig) -> List[int]:
    return [config.k] if config.k is not None else list(range(1, config.k_max + 1))


def _gosper2_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    for alpha in _alphas(config):
        for k in _ks(config):
            if alpha + k:
                yield VerificationTask.create(IdentityId.GOSPER2, verify_gosper2, alpha=alpha, k=k)


def _case1_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    for m in range(config.m_max + 1):
        yield VerificationTask.create(IdentityId.CASE1, verify_case1, m=m)


def _case2_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    for m in range(config.m_max + 1):
        yield VerificationTask.create(IdentityId.CASE2, verify_case2, m=m)


def _family_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    qs = [config.q] if config.q is not None else range(2, config.family_q_max + 1)
    for q in qs:
        js = [config.j] if config.j is not None else range(1, q + 1)
        for j in js:
            for m in range(config.family_m_max + 1):
                yield VerificationTask.create(IdentityId.FAMILY, family_instance, q=q, j=j, m=m)


def _lmm1_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    rng = seeded_random(config.seed, IdentityId.LMM1.value)
    for _ in range(config.random_draws):
        alpha = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        gamma = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max, nonzero=True)
        yield VerificationTask.create(IdentityId.LMM1, verify_lmm1_series, alpha=alpha, gamma=gamma,
                                      order=config.order)
    for _ in range(config.random_draws):
        alpha = -rng.randint(0, config.k_max)
        gamma = random_non_integer(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        x = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        if x == 1 and not alpha:
            x = Fraction(0)
        yield VerificationTask.create(IdentityId.LMM1, verify_lmm1_pointwise, alpha=alpha, gamma=gamma, x=x)


def _lmm2_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    if config.alpha is not None and config.k is not None:
        draws = [(config.alpha, config.k)]
    else:
        rng = seeded_random(config.seed, IdentityId.LMM2.value)
        draws = [(random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max),
                  rng.randint(1, config.k_max)) for _ in range(config.random_draws)]
    for alpha, k in draws:
        yield VerificationTask.create(IdentityId.LMM2, verify_lmm2, alpha=alpha, k=k, order=max(config.order, k + 2))


def _tr1_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    rng = seeded_random(config.seed, IdentityId.TR1.value)
    for _ in range(config.random_draws):
        a = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        b = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        c = random_non_integer(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        yield VerificationTask.create(IdentityId.TR1, verify_3tr1, a=a, b=b, c=c, order=config.order)


def _tr2_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    if config.alpha is not None and config.k is not None:
        draws = [(config.alpha, Fraction(config.k))]
    else:
        rng = seeded_random(config.seed, IdentityId.TR2.value)
        draws = []
        for index in range(config.random_draws):
            alpha = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max)
            if index % 2:
                k = random_non_integer(rng, config.alpha_numerator_max, config.alpha_denominator_max)
            else:
                k = Fraction(rng.randint(1, config.k_max))
            draws.append((alpha, k))
    for alpha, k in draws:
        yield VerificationTask.create(IdentityId.TR2, verify_3tr2, alpha=alpha, k=k, order=config.order)


def _convergent_lmm3_draw(rng: Any) -> Optional[Dict[str, Fraction]]:
    k = Fraction(rng.randint(1, 20), rng.randint(1, 4))
    magnitude = Fraction(4, 3) * k + Fraction(rng.randint(0, 40), rng.randint(1, 4))
    alpha = (magnitude if rng.random() < 0.5 else -magnitude) - k
    if not alpha or is_nonpositive_integer(alpha + k + 1):
        return None
    return {'alpha': alpha, 'k': k}


def _lmm3_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    if config.alpha is not None and config.k is not None:
        alpha, k = config.alpha, config.k
        mode = Lmm3Mode.TERMINATING if is_nonpositive_integer(alpha + k + 1) else Lmm3Mode.CONVERGENT
        yield VerificationTask.create(IdentityId.LMM3, verify_lmm3, alpha=alpha, k=k, mode=mode, eps=config.eps)
        return
    for k in range(1, config.lmm3_k_max + 1):
        for m in range(config.lmm3_m_max + 1):
            yield VerificationTask.create(IdentityId.LMM3, verify_lmm3, alpha=-k - 1 - m, k=k,
                                          mode=Lmm3Mode.TERMINATING, eps=config.eps)
    rng = seeded_random(config.seed, IdentityId.LMM3.value)
    drawn = 0
    while drawn < config.convergent_draws:
        params = _convergent_lmm3_draw(rng)
        if params is not None:
            drawn += 1
            yield VerificationTask.create(IdentityId.LMM3, verify_lmm3, mode=Lmm3Mode.CONVERGENT, eps=config.eps,
                                          **params)


def _theorem_draws(config: VerifyConfig, identity: IdentityId, count: int, k_max: int) -> List[tuple]:
    if config.alpha is not None and config.k is not None:
        return [(config.alpha, config.k)]
    rng = seeded_random(config.seed, identity.value)
    draws = []
    while len(draws) < count:
        alpha = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max, nonzero=True)
        k = rng.randint(1, k_max)
        if alpha + k:
            draws.append((alpha, k))
    return draws


def _proofpath_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    for alpha, k in _theorem_draws(config, IdentityId.PROOFPATH, config.random_draws, config.k_max):
        yield VerificationTask.create(IdentityId.PROOFPATH, verify_gosper2_proofpath, alpha=alpha, k=k,
                                      order=max(config.order, k + 2), eps=config.eps)


def _algorithm_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    for alpha, k in _theorem_draws(config, IdentityId.ALGORITHM, config.algorithm_draws,
                                   min(config.k_max, ALGORITHM_K_MAX)):
        yield VerificationTask.create(IdentityId.ALGORITHM, verify_algorithm, alpha=alpha, k=k,
                                      depth=config.telescoping_depth)


def _binom_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    rng = seeded_random(config.seed, IdentityId.BINOM.value)
    for _ in range(config.random_draws):
        a = -rng.randint(0, BINOM_A_MAX)
        x = random_rational(rng, config.alpha_numerator_max, config.alpha_denominator_max)
        yield VerificationTask.create(IdentityId.BINOM, verify_binom, a=a, x=x)


TASK_GENERATORS = OrderedDict([
    (IdentityId.GOSPER2, _gosper2_tasks),
    (IdentityId.CASE1, _case1_tasks),
    (IdentityId.CASE2, _case2_tasks),
    (IdentityId.LMM1, _lmm1_tasks),
    (IdentityId.LMM2, _lmm2_tasks),
    (IdentityId.TR1, _tr1_tasks),
    (IdentityId.TR2, _tr2_tasks),
    (IdentityId.LMM3, _lmm3_tasks),
    (IdentityId.FAMILY, _family_tasks),
    (IdentityId.PROOFPATH, _proofpath_tasks),
    (IdentityId.ALGORITHM, _algorithm_tasks),
    (IdentityId.BINOM, _binom_tasks),
])  # type: Dict[IdentityId, Callable[[VerifyConfig], Iterator[VerificationTask]]]


def iter_tasks(config: VerifyConfig) -> Iterator[VerificationTask]:
    """Generate the tasks of the configured identities in grid order."""
    for identity in config.identities:
        yield from TASK_GENERATORS[identity](config)


def verify_all(config: VerifyConfig) -> List[IdentityReport]:
    """
    Verify the configured identities.

    Tasks run on a thread pool if more than one worker is configured; the reports
    keep the grid order either way.
    """
    tasks = list(iter_tasks(config))
    LOGGER.info('Verifying %d instances of %s with %d worker(s).', len(tasks),
                ', '.join(i.value for i in config.identities) or 'no identities', config.workers)
    if config.workers > 1 and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as executor:
            results = list(executor.map(VerificationTask.run, tasks))
    else:
        results = [task.run() for task in tasks]
    reports = [report for result in results for report in result]
    summary = summarize(reports)
    LOGGER.info('Verified %(total)d reports: %(passed)d passed, %(failed)d failed.', summary)
    return reports


def summarize(reports: List[IdentityReport]) -> Dict[str, int]:
    """Count passed and failed reports."""
    passed = sum(1 for report in reports if report.equal)
    return {'total': len(reports), 'passed': passed, 'failed': len(reports) - passed}
