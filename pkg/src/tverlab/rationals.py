"""Exact rational scalars and their text form.

Every coordinate, weight, and LP value in this package is a
`fractions.Fraction` (arbitrary precision, always reduced, positive
denominator).  Serialized form is the string ``"p/q"``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple

Rational = Fraction
Point = Tuple[Fraction, ...]


def rat(value) -> Fraction:
    """Coerce an int, string ``"p/q"`` (or ``"p"``), or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rational scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(value: Fraction) -> str:
    """Serialize a Fraction as ``"p/q"`` (denominator always written)."""
    f = rat(value)
    return f"{f.numerator}/{f.denominator}"


def point(values: Iterable) -> Point:
    return tuple(rat(v) for v in values)


def point_strs(p: Sequence[Fraction]) -> list:
    return [rat_str(v) for v in p]


def parse_point(values: Sequence) -> Point:
    return tuple(rat(v) for v in values)
