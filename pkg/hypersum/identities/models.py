"""Data models of identity instances and verification reports."""
from collections import OrderedDict
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from hypersum.constants import IdentityId, ReportMode
from hypersum.datamodels import DataModel, RecordDataModel
from hypersum.errors import ParseError, ValidationError
from hypersum.exact_arith import RationalLike, as_rational, format_rational, parse_rational
from hypersum.hyper_eval import EvalResult
from hypersum.power_series import TruncatedSeries

Side = Union[EvalResult, TruncatedSeries]

INSTANCE_FIELDS = ('identity', 'params', 'lhs_plan', 'rhs_plan')


class IdentityInstance(DataModel):
    """One identity with concrete parameters and the plans used to evaluate both sides."""

    FIELDS = list(INSTANCE_FIELDS)
    identity = None  # type: IdentityId
    params = None  # type: Dict[str, Fraction]
    lhs_plan = None  # type: str
    """Human-readable description of the left side evaluation."""
    rhs_plan = None  # type: str
    """Human-readable description of the right side evaluation."""

    @classmethod
    def create(cls, identity: IdentityId, lhs_plan: str, rhs_plan: str,
               **params: RationalLike) -> 'IdentityInstance':
        """Create an instance, converting parameters to rationals in the given order."""
        return cls(identity=identity, params=OrderedDict((k, as_rational(v)) for k, v in params.items()),
                   lhs_plan=lhs_plan, rhs_plan=rhs_plan)

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(IdentityId, 'identity', required=True)
        self.validate_fields(dict, 'params', required=True)
        self.validate_fields(str, 'lhs_plan', 'rhs_plan', required=True)
        for name, value in self.params.items():
            if not isinstance(value, Fraction):
                raise ValidationError({'params': 'Parameter {!r} must be Fraction, not {}.'.format(
                    name, type(value).__name__)})

    def param(self, name: str) -> Fraction:
        """Return a parameter."""
        return self.params[name]

    def int_param(self, name: str) -> int:
        """Return an integer parameter."""
        value = self.params[name]
        if value.denominator != 1:
            raise ValidationError({name: 'Must be an integer, not {}.'.format(format_rational(value))})
        return int(value)

    def __str__(self) -> str:
        return '{}({})'.format(self.identity.value, ', '.join(
            '{}={}'.format(name, format_rational(value)) for name, value in self.params.items()))


class IdentityReport(RecordDataModel):
    """
    The verdict on one identity instance.

    In exact mode both sides are exact values, in enclosure mode the left side is an interval
    and the right side an exact value, in series mode both sides are truncated series.
    """

    FIELDS = ['instance', 'lhs', 'rhs', 'equal', 'mode', 'order', 'error']
    instance = None  # type: IdentityInstance
    lhs = None  # type: Optional[Side]
    rhs = None  # type: Optional[Side]
    equal = None  # type: bool
    mode = None  # type: ReportMode
    order = None  # type: Optional[int]
    """The series order of a series comparison."""
    error = None  # type: Optional[str]
    """The message of an error raised during verification or a failed intermediate step."""

    @classmethod
    def exact(cls, instance: IdentityInstance, lhs: RationalLike, rhs: RationalLike,
              error: Optional[str] = None) -> 'IdentityReport':
        """Compare two exact values."""
        lhs_result, rhs_result = EvalResult.exact(lhs), EvalResult.exact(rhs)
        equal = error is None and lhs_result == rhs_result
        return cls(instance=instance, lhs=lhs_result, rhs=rhs_result, equal=equal, mode=ReportMode.EXACT, order=None,
                   error=error)

    @classmethod
    def enclosure(cls, instance: IdentityInstance, lhs: EvalResult, rhs: RationalLike) -> 'IdentityReport':
        """Check that an exact value lies inside an enclosure."""
        return cls(instance=instance, lhs=lhs, rhs=EvalResult.exact(rhs), equal=lhs.contains(rhs),
                   mode=ReportMode.ENCLOSURE, order=None, error=None)

    @classmethod
    def series(cls, instance: IdentityInstance, lhs: TruncatedSeries, rhs: TruncatedSeries) -> 'IdentityReport':
        """Compare two series coefficientwise."""
        order = min(lhs.order, rhs.order)
        return cls(instance=instance, lhs=lhs, rhs=rhs, equal=lhs.truncate(order) == rhs.truncate(order),
                   mode=ReportMode.SERIES, order=order, error=None)

    @classmethod
    def failure(cls, instance: IdentityInstance, mode: ReportMode, error: str) -> 'IdentityReport':
        """Record an instance whose verification raised an error."""
        return cls(instance=instance, lhs=None, rhs=None, equal=False, mode=mode, order=None, error=error)

    def validate(self) -> None:
        """Validate this data model."""
        self.validate_fields(IdentityInstance, 'instance', required=True)
        self.instance.validate()
        self.validate_fields(bool, 'equal', required=True)
        self.validate_fields(ReportMode, 'mode', required=True)
        self.validate_fields(int, 'order', required=self.mode is ReportMode.SERIES and self.error is None)
        self.validate_fields(str, 'error', required=False)
        side_type = TruncatedSeries if self.mode is ReportMode.SERIES else EvalResult
        self.validate_fields(side_type, 'lhs', 'rhs', required=self.error is None)
        for side in (self.lhs, self.rhs):
            if isinstance(side, EvalResult):
                side.validate()

    def serialize_instance(self, record: Dict[str, Any], value: IdentityInstance) -> None:
        """Flatten the instance into the record."""
        record['identity'] = value.identity.value
        record['params'] = OrderedDict((name, format_rational(v)) for name, v in value.params.items())
        record['lhs_plan'] = value.lhs_plan
        record['rhs_plan'] = value.rhs_plan

    def serialize_lhs(self, record: Dict[str, Any], value: Optional[Side]) -> None:
        """Write the left side in text format."""
        record['lhs'] = None if value is None else value.to_text()

    def serialize_rhs(self, record: Dict[str, Any], value: Optional[Side]) -> None:
        """Write the right side in text format."""
        record['rhs'] = None if value is None else value.to_text()

    @classmethod
    def load_record(cls, record: Dict[str, Any]) -> 'IdentityReport':
        """
        Load a report from a flat record.

        :raise ParseError: If a field cannot be decoded.
        :raise ValidationError: If the record has unknown fields or the report is invalid.
        """
        if not isinstance(record, dict):
            raise ValidationError({cls.__name__: 'Record must be an object, not {}.'.format(type(record).__name__)})
        known = set(INSTANCE_FIELDS) | set(cls.FIELDS) - {'instance'}
        for key in record:
            if key not in known:
                raise ValidationError({key: 'Unknown field {!r}.'.format(key)})
        try:
            identity = IdentityId(record['identity'])
            mode = ReportMode(record['mode'])
            params = record['params']
            if not isinstance(params, dict):
                raise ParseError('Parameters must be an object.')
            instance = IdentityInstance(
                identity=identity, params=OrderedDict((k, parse_rational(v)) for k, v in params.items()),
                lhs_plan=record['lhs_plan'], rhs_plan=record['rhs_plan'])
            report = cls(instance=instance, lhs=_load_side(record['lhs'], mode), rhs=_load_side(record['rhs'], mode),
                         equal=record['equal'], mode=mode, order=record['order'], error=record['error'])
        except KeyError as e:
            raise ParseError('Missing field {}.'.format(e)) from None
        except (AttributeError, TypeError, ValueError) as e:
            raise ParseError('Invalid record: {}'.format(e)) from None
        report.validate()
        return report


def _load_side(text: Optional[str], mode: ReportMode) -> Optional[Side]:
    if text is None:
        return None
    if not isinstance(text, str):
        raise ParseError('Side must be text, not {}.'.format(type(text).__name__))
    if mode is ReportMode.SERIES:
        return TruncatedSeries.from_text(text)
    return EvalResult.from_text(text)
