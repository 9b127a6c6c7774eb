"""JSON codec for models and reports.

Dataclasses take part in the conversion through two optional classmethods.
``__transform_input__`` receives the raw object before the constructor is
called, ``__transform_output__`` receives the converted fields. Both may
edit the object in place or return a replacement.

Model files keep the snake_case keys of their schema (`MODEL_KEY_CASE`).
Reports are written with dromedaryCase keys (`REPORT_KEY_CASE`). Scalars are
exact: a rational is written as a "p/q" string and read back from either
such a string or a JSON integer.

Nothing here is exported to the `moricone` namespace, import it from
`moricone.transform`.

Attributes:
    RawDataType (Dict[str, Any]): (Type alias) A decoded JSON object.
    MODEL_KEY_CASE (str): Key case of model files.
    REPORT_KEY_CASE (str): Key case of reports.
    MapFunction ((T) -> `Any`): (Type alias) Replacement function for a single value.
"""

import dataclasses
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, MutableMapping, Optional, Sequence, Type, TypeVar, overload

import lettercase

from .arith import RatMatrix, RationalVector, format_rational, to_rational
from .errors import ModelFormatError

__all__ = ["RawDataType", "MODEL_KEY_CASE", "REPORT_KEY_CASE",
           "transform_input", "transform_output",
           "convert_to_raw", "build_from_raw",
           "MapFunction", "map_convert_value", "map_convert_values",
           "map_filter_none", "map_remove_keys",
           "rational_from_raw", "rational_vector_from_raw", "rational_vector_to_raw",
           "rational_matrix_from_raw", "rational_matrix_to_raw"]

T = TypeVar("T")
KT = TypeVar("KT")

RawDataType = Dict[str, Any]
MapFunction = Callable[[T], Any]

MODEL_KEY_CASE = lettercase.SNAKE_CASE
REPORT_KEY_CASE = lettercase.DROMEDARY_CASE

_KEY_MEMO = lettercase.ConversionMemo()


def _run_hook(cls: Any, hook: str, data: Any) -> Any:
    """Run a transform hook of cls, if it has one.

    Returns:
        Whatever the hook returned, or data itself if the hook returned
        `None` or doesn't exist.
    """
    transformer = getattr(cls, hook, None)
    if transformer is None:
        return data

    replacement = transformer(data)
    return data if replacement is None else replacement


def transform_input(cls: Any, data: RawDataType) -> Any:
    """Apply ``cls.__transform_input__`` to raw data read from JSON."""
    return _run_hook(cls, "__transform_input__", data)


def transform_output(cls: Any, data: RawDataType) -> Any:
    """Apply ``cls.__transform_output__`` to the converted fields of an instance.

    The hook may turn the object into another JSON value, a cone for example
    is written as its list of generators in some places.
    """
    return _run_hook(cls, "__transform_output__", data)


def _rekey(data: Any, source_case: str, target_case: str) -> None:
    if isinstance(data, dict) and source_case != target_case:
        lettercase.mut_convert_keys(data, source_case, target_case, memo=_KEY_MEMO)


def convert_to_raw(obj: Any, *, key_case: str = REPORT_KEY_CASE) -> Any:
    """Turn models into JSON-compatible values.

    Dataclasses become objects whose fields are converted recursively, then
    passed through `transform_output` and re-keyed to key_case. Rationals
    become "p/q" strings, enum members their value, tuples lists. Anything
    else is returned unchanged.

    Args:
        obj: Value to convert
        key_case: Key case of the produced objects
    """
    if dataclasses.is_dataclass(obj):
        data = {field.name: convert_to_raw(getattr(obj, field.name), key_case=key_case)
                for field in dataclasses.fields(obj)}
        data = transform_output(obj, data)
        _rekey(data, MODEL_KEY_CASE, key_case)
        return data

    if isinstance(obj, Fraction):
        return format_rational(obj)

    if isinstance(obj, Enum):
        return obj.value

    if isinstance(obj, (list, tuple)):
        return [convert_to_raw(item, key_case=key_case) for item in obj]

    if isinstance(obj, dict):
        return {convert_to_raw(key, key_case=key_case): convert_to_raw(value, key_case=key_case)
                for key, value in obj.items()}

    return obj


@overload
def build_from_raw(cls: Type[T], raw_data: None, *, key_case: str = ...) -> None: ...


@overload
def build_from_raw(cls: Type[T], raw_data: RawDataType, *, key_case: str = ...) -> T: ...


def build_from_raw(cls: Type[T], raw_data: Optional[RawDataType], *, key_case: str = REPORT_KEY_CASE) -> Optional[T]:
    """Construct cls from a decoded JSON object.

    The keys are converted from key_case to snake_case, then
    `transform_input` runs and its result is passed to the constructor as
    keyword arguments. `None` passes through.

    Raises:
        ModelFormatError: If raw_data isn't an object or doesn't fit the constructor.
    """
    if raw_data is None:
        return None

    if not isinstance(raw_data, dict):
        raise ModelFormatError(f"expected an object for {cls.__name__}, got {type(raw_data).__name__}")

    _rekey(raw_data, key_case, MODEL_KEY_CASE)
    kwargs = transform_input(cls, raw_data)

    try:
        return cls(**kwargs)
    except TypeError as e:
        raise ModelFormatError(f"can't build {cls.__name__}: {e}") from e


def map_convert_value(mapping: MutableMapping[KT, T], key: KT, func: MapFunction) -> None:
    """Replace the value under key by func(value), in place.

    Nothing happens if the key is absent.
    """
    if key in mapping:
        mapping[key] = func(mapping[key])


def map_convert_values(mapping: RawDataType, **key_funcs: MapFunction) -> None:
    """`map_convert_value` for several keys, given as keyword arguments."""
    for key, func in key_funcs.items():
        map_convert_value(mapping, key, func)


def map_filter_none(mapping: MutableMapping[Any, Any]) -> None:
    """Drop the entries whose value is `None`, in place."""
    for key in [key for key, value in mapping.items() if value is None]:
        del mapping[key]


def map_remove_keys(mapping: MutableMapping[KT, Any], *keys: KT) -> None:
    """Drop the given keys, in place. Absent keys are ignored."""
    for key in keys:
        mapping.pop(key, None)


def rational_from_raw(value: Any) -> Fraction:
    """Convert a raw JSON value to a rational.

    Accepts "p/q" strings and integers.

    Raises:
        ModelFormatError: For floats, booleans and malformed strings.
    """
    try:
        return to_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise ModelFormatError(f"not an exact rational: {value!r}") from e


def rational_vector_from_raw(values: Any) -> RationalVector:
    if not isinstance(values, list):
        raise ModelFormatError(f"expected a list of rationals, got {values!r}")

    return tuple(rational_from_raw(value) for value in values)


def rational_vector_to_raw(values: Sequence[Any]) -> List[str]:
    return [format_rational(value) for value in values]


def rational_matrix_from_raw(rows: Any) -> RatMatrix:
    """Build a matrix from a list of rows of rationals.

    Raises:
        ModelFormatError: If the rows are malformed or ragged.
    """
    if not isinstance(rows, list) or not rows:
        raise ModelFormatError(f"expected a non-empty list of rows, got {rows!r}")

    vectors = [rational_vector_from_raw(row) for row in rows]
    if any(len(row) != len(vectors[0]) for row in vectors):
        raise ModelFormatError("matrix rows have different lengths")

    return RatMatrix.from_rows(vectors)


def rational_matrix_to_raw(matrix: RatMatrix) -> List[List[str]]:
    return [rational_vector_to_raw(row) for row in matrix.to_rows()]
