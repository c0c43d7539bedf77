"""Errors of hypersum."""
from typing import Dict


class HypersumError(Exception):
    """
    Base error of hypersum package.

    :param error: An error message.
    """

    def __init__(self, error: str):
        self.error = error

    def __str__(self) -> str:
        return self.error

    def __repr__(self) -> str:
        return '{}({!r})'.format(self.__class__.__name__, self.error)


class DomainError(HypersumError):
    """Error for arguments outside the domain of an operation."""


class PoleError(DomainError):
    """Error for a vanishing denominator."""


class IllDefinedError(HypersumError):
    """Error for evaluations whose value is not uniquely determined."""


class ClassificationError(HypersumError):
    """Error for parameters of the wrong hypergeometric classification."""


class NotSummableError(HypersumError):
    """Error for terms without a hypergeometric anti-difference."""


class CertificateError(HypersumError):
    """Error for a failed post-condition of an exact algebraic construction."""


class ParseError(HypersumError):
    """Error for parsing and decoding failures."""


class ValidationError(HypersumError):
    """
    Error for validation failures.

    :param errors: A dictionary of field names (keys) and error messages (values).
    """

    def __init__(self, errors: Dict[str, str]):
        super().__init__('Validation failed: {!r}'.format(errors))
        self.errors = errors

    def __repr__(self) -> str:
        return '{}({!r})'.format(self.__class__.__name__, self.errors)
