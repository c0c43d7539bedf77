"""Settings of hypersum."""
from enum import Enum
from fractions import Fraction
from typing import Dict, Generic, Type, TypeVar

from appsettings import AppSettings, IntegerSetting, ListSetting, PositiveIntegerSetting, Setting
from django.core.exceptions import ImproperlyConfigured, ValidationError

from hypersum.constants import DEFAULT_EPS, DEFAULT_SEED, DEFAULT_SERIES_ORDER, IdentityId, OutputFormat
from hypersum.errors import ParseError
from hypersum.exact_arith import parse_rational

T = TypeVar('T', bound=Enum)


class EnumSetting(Setting, Generic[T]):
    """Setting holding a member of a string enumeration, given by its name or value in any case."""

    def __init__(self, enum_type: Type[T], *args, **kwargs):
        kwargs.setdefault('transform_default', True)
        super().__init__(*args, **kwargs)
        self.enum_type = enum_type
        self.choices = {}  # type: Dict[str, T]
        for member in enum_type:
            self.choices[member.name.lower()] = member
            self.choices[member.value.lower()] = member

    def validate(self, value) -> None:
        """Validate a member name or value."""
        try:
            self.transform(value)
        except KeyError:
            raise ValidationError('{!r} is not a valid {}. Available values: {}.'.format(
                value, self.enum_type.__name__, ', '.join(m.name for m in self.enum_type)))

    def transform(self, value) -> T:
        """Look up the member by name or value."""
        return self.choices[str(value).lower()]


class RationalSetting(Setting):
    """Rational setting in rational text format ("1/3", "-2")."""

    def __init__(self, *args, positive: bool = False, **kwargs):
        kwargs.setdefault('transform_default', True)
        super().__init__(*args, **kwargs)
        self.positive = positive

    def validate(self, value) -> None:
        """Validate a rational value."""
        try:
            rational = self.transform(value)
        except (ParseError, AttributeError):
            raise ValidationError('{!r} is not a valid rational.'.format(value))
        if self.positive and rational <= 0:
            raise ValidationError('{!r} is not positive.'.format(value))

    def transform(self, value) -> Fraction:
        """Transform rational text to a rational."""
        return parse_rational(value)


class HypersumSettings(AppSettings):
    """hypersum settings."""

    series_order = PositiveIntegerSetting(default=DEFAULT_SERIES_ORDER)
    eps = RationalSetting(default=DEFAULT_EPS, positive=True)
    seed = IntegerSetting(default=DEFAULT_SEED)
    output_format = EnumSetting(OutputFormat, default='TEXT')
    workers = IntegerSetting(default=1, minimum=1)
    identities = ListSetting(item_type=str, default=[i.value for i in IdentityId])
    alpha_numerator_max = PositiveIntegerSetting(default=20)
    alpha_denominator_max = IntegerSetting(default=9, minimum=1)
    k_max = PositiveIntegerSetting(default=12)
    m_max = PositiveIntegerSetting(default=10)
    lmm3_k_max = PositiveIntegerSetting(default=8)
    lmm3_m_max = PositiveIntegerSetting(default=8)
    family_q_max = IntegerSetting(default=6, minimum=2)
    family_m_max = PositiveIntegerSetting(default=2)
    random_draws = PositiveIntegerSetting(default=100)
    convergent_draws = PositiveIntegerSetting(default=50)
    algorithm_draws = PositiveIntegerSetting(default=200)
    telescoping_depth = PositiveIntegerSetting(default=50)

    class Meta:
        """Metadata."""

        setting_prefix = 'hypersum_'


SETTINGS = HypersumSettings()


def check_settings():
    """Check settings."""
    HypersumSettings.check()
    known = {i.value for i in IdentityId}
    unknown = [name for name in SETTINGS.identities if name not in known]
    if unknown:
        raise ImproperlyConfigured('HYPERSUM_IDENTITIES contains unknown identities: {}.'.format(', '.join(unknown)))
