"""
Data models of parameters, results and reports.

A model declares its fields in order; class attributes are the defaults:

.. code:: python

    class Instance(DataModel):
        FIELDS = ['identity', 'params']
        identity = None  # type: IdentityId
        params = None  # type: Dict[str, Fraction]

        def validate(self) -> None:
            self.validate_fields(IdentityId, 'identity', required=True)
"""
import json
from abc import ABC, abstractmethod
from collections import OrderedDict
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Tuple, Type, TypeVar

from hypersum.errors import ParseError, ValidationError
from hypersum.exact_arith import format_rational


class DataModel(ABC):
    """
    A model holding data fields, compared by value.

    :param data: Values of fields; omitted fields keep their class defaults.
    :raise TypeError: On unknown fields or if a field without a class default is omitted.
    """

    FIELDS = None  # type: List[str]
    """Names of data fields in order."""

    def __init__(self, **data: Any) -> None:
        if self.FIELDS is None:
            raise TypeError('DataModel subclasses must define FIELDS class attribute.')
        unknown = [name for name in data if name not in self.FIELDS]
        if unknown:
            raise TypeError('{}() got unexpected fields: {}.'.format(
                self.__class__.__name__, ', '.join(repr(name) for name in unknown)))
        missing = [name for name in self.FIELDS if name not in data and not hasattr(self, name)]
        if missing:
            raise TypeError('{}() is missing fields without default: {}.'.format(
                self.__class__.__name__, ', '.join(repr(name) for name in missing)))
        for name, value in data.items():
            setattr(self, name, value)

    def field_values(self) -> Tuple[Any, ...]:
        """Return the values of fields in order, nested models as tuples."""
        return tuple(value.field_values() if isinstance(value, DataModel) else value for value in self)

    @abstractmethod
    def validate(self) -> None:
        """Validate this data model."""

    def validate_fields(self, required_type: Type, *fields: str, required: bool = True) -> None:
        """
        Validate the types of fields; bool never passes for int.

        :param required_type: The required type of the fields.
        :param fields: The fields to validate.
        :param required: Whether the fields are required or can be None.
        :raise ValidationError: when validation fails.
        """
        for name in fields:
            value = getattr(self, name)
            if isinstance(value, required_type) and not (isinstance(value, bool) and required_type is not bool):
                continue
            if value is None and not required:
                continue
            raise ValidationError({name: 'Must be {}{}, not {}.'.format(
                required_type.__name__, '' if required else ' or None', type(value).__name__)})

    def __iter__(self) -> Iterator[Any]:
        """Iterate over values of all fields."""
        return (getattr(self, name) for name in self.FIELDS)

    def __repr__(self) -> str:
        return '{}({})'.format(self.__class__.__name__, ', '.join(
            '{}={}'.format(name, format_rational(value) if isinstance(value, Fraction) else repr(value))
            for name, value in zip(self.FIELDS, self)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DataModel):
            return NotImplemented
        return type(self) is type(other) and self.field_values() == other.field_values()


T = TypeVar('T', bound='RecordDataModel')


class RecordDataModel(DataModel, ABC):
    """
    Data model with serialization to flat records, one JSON object per line.

    A field is exported by ``serialize_<field>(record, value)`` if defined, otherwise rationals
    are written in rational text format, enums as their values and nested records as objects.
    A field is loaded by a static method ``deserialize_<field>(value)`` if defined, otherwise as is.
    """

    def export_record(self) -> Dict[str, Any]:
        """
        Export the model as a record.

        :raise ValidationError: If the model validation fails.
        """
        self.validate()
        record = OrderedDict()  # type: Dict[str, Any]
        for field_name in self.FIELDS:
            value = getattr(self, field_name)
            serialize_func = getattr(self, 'serialize_' + field_name, None)
            if serialize_func:
                serialize_func(record, value)
            else:
                record[field_name] = serialize_value(value)
        return record

    def export_json(self) -> str:
        """Export the model as a single-line JSON document."""
        return json.dumps(self.export_record(), separators=(', ', ': '))

    @classmethod
    def load_record(cls: Type[T], record: Dict[str, Any]) -> T:
        """
        Load a model from a record.

        :raise ValidationError: If the record has unknown fields or the model is invalid.
        :raise TypeError: If a required field is missing.
        """
        if not isinstance(record, dict):
            raise ValidationError({cls.__name__: 'Record must be an object, not {}.'.format(type(record).__name__)})
        data = {}
        for key, value in record.items():
            if key not in cls.FIELDS:
                raise ValidationError({key: 'Unknown field {!r}.'.format(key)})
            deserialize_func = getattr(cls, 'deserialize_' + key, None)
            data[key] = deserialize_func(value) if deserialize_func else value
        model = cls(**data)
        model.validate()
        return model

    @classmethod
    def load_json(cls: Type[T], text: str) -> T:
        """
        Load a model from a JSON document.

        :raise ParseError: If the document is not valid JSON.
        """
        try:
            record = json.loads(text)
        except ValueError as e:
            raise ParseError('Invalid JSON record: {}'.format(e)) from None
        return cls.load_record(record)


def serialize_value(value: Any) -> Any:
    """Convert a field value to a JSON-compatible value."""
    if isinstance(value, RecordDataModel):
        return value.export_record()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return OrderedDict((key, serialize_value(item)) for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [serialize_value(item) for item in value]
    return value
