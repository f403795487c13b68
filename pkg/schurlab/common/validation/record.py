"""common.validation.record

This module contains utility functions for validating records (dictionaries)
against TypedDict parameter schemas, and for coercing the string values of
a flat config file into the types a schema asks for.
"""
from collections.abc import Callable, Collection, Mapping
from enum import Enum
from types import UnionType
from typing import (
    Any,
    NotRequired,
    Required,
    TypeVar,
    get_args,
    get_origin,
)

C = TypeVar('C', bound=Collection)

TRUE_WORDS = ("true", "yes", "on", "1")
FALSE_WORDS = ("false", "no", "off", "0")


class Requiredness(Enum):
    """Enum for requiredness of a key."""
    REQUIRED = Required
    OPTIONAL = NotRequired
    UNMARKED = None


def get_requiredness_type(typ: type) -> tuple[Requiredness, type]:
    """Get the requiredness and wrapped type of a value."""
    # get_origin is expected to return NotRequired, Required, or None
    # for Required/NotRequired args holds exactly the wrapped type
    origin = get_origin(typ)
    if origin in (Required, NotRequired):
        return Requiredness(origin), get_args(typ)[0]
    return Requiredness.UNMARKED, typ


def unpack_required_optional(
        schema: Mapping[str, type],
        factory: Callable[[list[str]], C] = list,
        total: bool = True,
) -> tuple[C, C]:
    """Unpack a schema into required and optional keys.

    - keys marked as `Required` are required
    - keys marked as `NotRequired` are optional
    - unmarked keys are required if `total=True`, otherwise optional

    Args:
        schema (Mapping[str, type]): The schema annotations to unpack.
        factory (callable): A callable that takes an iterable and returns a
            set-like object.
        total (bool): Requiredness of unmarked keys.

    Returns:
        tuple: required keys and optional keys.
    """
    required, optional = [], []
    for key, typ in schema.items():
        requiredness, _ = get_requiredness_type(typ)
        match (requiredness, total):
            case (Requiredness.REQUIRED, _) | (Requiredness.UNMARKED, True):
                required.append(key)
            case (Requiredness.OPTIONAL, _) | (Requiredness.UNMARKED, False):
                optional.append(key)
            case _:
                raise AssertionError(
                    f"Unexpected state: requiredness={requiredness}, total={total}"
                )
    return factory(required), factory(optional)


def _type_name(typ: Any) -> str:
    return getattr(typ, "__name__", None) or str(typ)


def _matches(value: Any, typ: Any) -> bool:
    # bool is an int subclass; never accept it where a number is expected
    if isinstance(value, bool) and typ is not bool:
        if isinstance(typ, UnionType):
            return bool in get_args(typ)
        return False
    if get_origin(typ) is list:
        (item_type,) = get_args(typ) or (object,)
        return isinstance(value, list) and all(
            _matches(item, item_type) for item in value
        )
    return isinstance(value, typ)


def validate_keys(
        record: Mapping[str, Any],
        valid_keys: Collection[str] | Mapping[str, type],
        ignore_extra=True,
        required=True,
        total=True,
) -> None:
    """Validate that the keys in the record are valid according to the
    provided keys.

    Args:
        record (dict): The record to validate.
        valid_keys (Collection[str] | Mapping[str, type]): A collection of
            valid keys or a mapping of valid keys to types. If a mapping is
            provided, the types are checked against the record values.
        ignore_extra (bool): If True, keys not in valid_keys are ignored.
        required (bool): If True, required keys must be present.
        total (bool): Requiredness of keys not marked Required/NotRequired.

    Raises:
        KeyError: If any keys in the record are not valid.
        TypeError: If any values in the record do not match the expected types.
    """
    match valid_keys:
        case Mapping():
            schema = valid_keys
        case Collection():
            schema = {key: object for key in valid_keys}
        case _:
            raise TypeError(f"Invalid type for valid_keys: {type(valid_keys)}")
    record_set = set(record.keys())
    required_keys, optional_keys = unpack_required_optional(schema, set, total)
    if required:
        missing_keys = required_keys - record_set
        if missing_keys:
            raise KeyError(f"Missing required keys: {', '.join(sorted(missing_keys))}")
    # all required keys are present
    extra_keys = record_set - required_keys - optional_keys
    if extra_keys and not ignore_extra:
        raise KeyError(f"Invalid keys: {', '.join(sorted(extra_keys))}")
    # all record keys are valid
    for key in record_set - extra_keys:
        _, expected = get_requiredness_type(schema[key])
        if not _matches(record[key], expected):
            raise TypeError(
                f"Invalid type for key '{key}': expected {_type_name(expected)}, "
                f"got {type(record[key]).__name__}"
            )


def coerce_value(raw: str, typ: Any) -> Any:
    """Convert a config-file string into a value of the given type.

    Unions are tried left to right; lists are comma separated.

    Raises:
        ValueError: If the string cannot be read as the type.
    """
    raw = raw.strip()
    if isinstance(typ, UnionType):
        for option in get_args(typ):
            try:
                return coerce_value(raw, option)
            except ValueError:
                continue
        raise ValueError(f"cannot read {raw!r} as {_type_name(typ)}")
    if get_origin(typ) is list:
        (item_type,) = get_args(typ) or (str,)
        if not raw:
            return []
        return [coerce_value(item, item_type) for item in raw.split(",")]
    if typ is bool:
        if raw.lower() in TRUE_WORDS:
            return True
        if raw.lower() in FALSE_WORDS:
            return False
        raise ValueError(f"cannot read {raw!r} as bool")
    if typ is int:
        return int(raw)
    if typ is float:
        return float(raw)
    if typ is str or typ is object:
        return raw
    return typ(raw)


def coerce_record(
        record: Mapping[str, Any],
        schema: Mapping[str, type],
) -> dict[str, Any]:
    """Coerce the string values of a record to the schema's types.

    String items of list values are coerced one by one; other values and
    keys unknown to the schema are passed through.
    """
    coerced = {}
    for key, value in record.items():
        if key not in schema:
            coerced[key] = value
            continue
        _, expected = get_requiredness_type(schema[key])
        if isinstance(value, str):
            coerced[key] = coerce_value(value, expected)
        elif isinstance(value, list) and get_origin(expected) is list:
            (item_type,) = get_args(expected) or (str,)
            coerced[key] = [
                coerce_value(item, item_type) if isinstance(item, str) else item
                for item in value
            ]
        else:
            coerced[key] = value
    return coerced
