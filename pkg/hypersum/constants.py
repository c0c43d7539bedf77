"""Constants and enumerations."""
# This module must contain only constants and enums
# with basic types to be importable from settings.
from enum import Enum, unique

DEFAULT_SERIES_ORDER = 64
DEFAULT_EPS = '1/1000000000000000000000000000000'
DEFAULT_SEED = 0


@unique
class Classification(str, Enum):
    """Classification of 2F1 parameters (a, b; c)."""

    STANDARD_TERMINATING = 'standard-terminating'
    """c is not a non-positive integer and an upper parameter is."""
    EXTENDED_TERMINATING = 'extended-terminating'
    """c is a non-positive integer and an upper parameter b is one with c < b."""
    NON_TERMINATING = 'non-terminating'
    """Neither c nor an upper parameter is a non-positive integer."""
    UNDEFINED = 'undefined'
    """c is a non-positive integer and no upper parameter qualifies."""

    @property
    def is_terminating(self) -> bool:
        """Whether the series is a finite sum."""
        return self in (Classification.STANDARD_TERMINATING, Classification.EXTENDED_TERMINATING)


@unique
class EvalMode(str, Enum):
    """How a value was obtained."""

    EXACT = 'exact'
    ENCLOSURE = 'enclosure'


@unique
class ReportMode(str, Enum):
    """How both sides of an identity are compared."""

    EXACT = 'exact'
    """Structural equality of rationals."""
    ENCLOSURE = 'enclosure'
    """The exact right side lies inside the left-side interval."""
    SERIES = 'series'
    """All coefficients up to the order are identical."""


@unique
class Lmm3Mode(str, Enum):
    """Evaluation route for the strange evaluation 2F1(a+k+1, 2; k+2; k/(a+k))."""

    TERMINATING = 'terminating'
    CONVERGENT = 'convergent'


@unique
class Case1Branch(str, Enum):
    """Rows of the 2F1(a, 3a+1; 3a; 3/2) table."""

    INTEGER = 'integer'
    """a = -1 - m"""
    THIRD = 'third'
    """a = -1/3 - m"""
    TWO_THIRDS = 'two_thirds'
    """a = -2/3 - m"""


@unique
class Case2Branch(str, Enum):
    """Rows of the 2F1(a, 4a+1; 4a; 4/3) table."""

    INTEGER = 'integer'
    """a = -1 - m"""
    QUARTER = 'quarter'
    """a = -1/4 - m"""
    HALF = 'half'
    """a = -1/2 - m"""
    THREE_QUARTERS = 'three_quarters'
    """a = -3/4 - m"""


@unique
class IdentityId(str, Enum):
    """Identifiers of the verifiable identities."""

    GOSPER2 = 'gosper2'
    CASE1 = 'case1'
    CASE2 = 'case2'
    LMM1 = 'lmm1'
    LMM2 = 'lmm2'
    TR1 = '3tr1'
    TR2 = '3tr2'
    LMM3 = 'lmm3'
    FAMILY = 'family'
    PROOFPATH = 'proofpath'
    ALGORITHM = 'algorithm'
    BINOM = 'binom'


@unique
class OutputFormat(str, Enum):
    """Output format of the command line tools."""

    TEXT = 'text'
    STRUCTURED = 'structured'
