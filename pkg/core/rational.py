# core/rational.py
# Exact rational parsing and the pydantic field type used by every schema.

from fractions import Fraction
from typing import Annotated, Any, List, Union

from pydantic import BeforeValidator, PlainSerializer, WithJsonSchema

from core.errors import SpecError

RationalLike = Union[Fraction, int, str]


def parse_rational(value: Any) -> Fraction:
    """Parse "p/q", integer, decimal or exponent literals exactly."""
    if isinstance(value, bool):
        raise SpecError(f"Boolean is not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # floats only arrive from hand-written JSON; keep the decimal the user typed
        return Fraction(repr(value))
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise SpecError(f"Invalid rational literal {value!r}: {e}") from e
    raise SpecError(f"Unsupported rational value {value!r} of type {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    return str(value)


# Pydantic field: accepts any rational literal, serializes as "p/q"
Rational = Annotated[
    Fraction,
    BeforeValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    WithJsonSchema({"type": "string", "examples": ["1", "3/4"]}),
]


def parse_rationals(values: List[Any]) -> List[Fraction]:
    return [parse_rational(v) for v in values]
