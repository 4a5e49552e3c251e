# Exact scalars. Every coordinate and weight is a Fraction; floats never enter
# the geometry. Strings such as "3/7", "0.25" or "-4" parse exactly.

from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

from rectpack.errors import ValidationError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str, Decimal]


def to_scalar(value: ScalarLike) -> Fraction:
    """Convert ``value`` to an exact Fraction.

    Floats and booleans are rejected: a float has already lost the value the
    user meant, so accepting it would hide a precision bug.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"inexact scalar {value!r}; pass a string or a Fraction")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ValidationError(f"cannot parse scalar {value!r}") from e
    raise ValidationError(f"unsupported scalar type {type(value).__name__}")


def format_scalar(value: Fraction) -> str:
    """Canonical string form: "5", "-3/7"."""
    return str(Fraction(value))
