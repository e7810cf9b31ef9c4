from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel


def convert_value(value: Any) -> Any:
    """
    Convert a value to a JSON-serializable format.
    Rationals become ``"p/q"`` strings; integral rationals stay integers.
    """
    if value is None or isinstance(value, (str, bool, int)):
        return value
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bytes):
        return value.decode("utf-8")
    try:
        return str(value)
    except Exception:
        return value


def filter_null_fields(data: Any) -> Any:
    """
    Recursively remove null/None fields from dictionaries.
    """
    if isinstance(data, dict):
        return {
            k: filter_null_fields(v)
            for k, v in data.items()
            if v is not None
        }
    elif isinstance(data, list):
        return [filter_null_fields(item) for item in data if item is not None]
    return data


def sanitize_fields(data: Any) -> Any:
    """Turn result objects into plain JSON values for reports.

    Handles pydantic models, mappings with non-string keys (bidegrees such as
    ``(p, m)`` become ``"p,m"``), tuples, sets and objects exposing ``to_dict``.
    """
    if isinstance(data, BaseModel):
        return sanitize_fields(data.model_dump(exclude_none=True))
    if hasattr(data, "to_dict") and callable(data.to_dict):
        return sanitize_fields(data.to_dict())
    if isinstance(data, dict):
        return {
            _key(k): sanitize_fields(v)
            for k, v in data.items()
            if v is not None
        }
    if isinstance(data, (list, tuple)):
        return [sanitize_fields(v) for v in data]
    if isinstance(data, (set, frozenset)):
        return [sanitize_fields(v) for v in sorted(data)]
    return convert_value(data)


def _key(key: Any) -> str:
    if isinstance(key, tuple):
        return ",".join(str(convert_value(k)) for k in key)
    return str(convert_value(key))
