"""common.utils.numeric

Scalar helpers shared by the exact and approximate arithmetic paths.
"""

import math
from fractions import Fraction
from typing import Any

from schurlab.common.errors import ModeMismatchError
from schurlab.common.schema import APPROX, EXACT, Mode, Scalar


def mode_of(value: Any) -> Mode:
    """Arithmetic mode a scalar belongs to.

    Python ints count as exact.
    """
    match value:
        case bool():
            raise ModeMismatchError(f"booleans are not scalars: {value!r}")
        case Fraction() | int():
            return EXACT
        case float():
            return APPROX
    raise ModeMismatchError(f"unsupported scalar type {type(value).__name__}")


def to_mode(value: Any, mode: Mode) -> Scalar:
    """Lift an int or Fraction into the given mode.

    A float is never turned back into an exact value.
    """
    if mode == EXACT:
        if isinstance(value, float):
            raise ModeMismatchError(
                "cannot use a double where an exact rational is required",
                value=value,
            )
        return Fraction(value)
    return float(value)


def zero(mode: Mode) -> Scalar:
    return Fraction(0) if mode == EXACT else 0.0


def one(mode: Mode) -> Scalar:
    return Fraction(1) if mode == EXACT else 1.0


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Square root of a nonnegative rational if it is rational, else None."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None
