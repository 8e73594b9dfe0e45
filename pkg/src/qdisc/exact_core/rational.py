"""Exact rational scalars.

All scalar arithmetic in the package goes through :class:`gmpy2.mpq`, which
keeps values canonical (positive denominator, reduced) after every operation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from gmpy2 import mpq, mpz

Rational = type(mpq())
RationalLike = Union[int, Fraction, "mpq", str]

_LITERAL = re.compile(r"^\s*[+-]?\d+(\s*/\s*[+-]?\d+)?\s*$")


def Q(value: RationalLike, den: int | None = None) -> "mpq":
    """Coerce ``value`` (or ``value/den``) into a canonical rational."""
    if den is not None:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return mpq(value, den)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def parse_rational(text: str) -> "mpq":
    """Parse ``"p"`` or ``"p/q"`` with integer ``p`` and ``q``."""
    if not _LITERAL.match(text):
        raise ValueError(f"malformed rational literal: {text!r}")
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return mpq(int(p), int(q))
    return mpq(int(text))


def format_rational(x) -> str:
    x = mpq(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"


def to_fraction(x) -> Fraction:
    x = mpq(x)
    return Fraction(int(x.numerator), int(x.denominator))


def is_integer(x) -> bool:
    return mpq(x).denominator == 1


def as_int(x) -> int:
    x = mpq(x)
    if x.denominator != 1:
        raise ValueError(f"{format_rational(x)} is not an integer")
    return int(x.numerator)


def qpow(base, exp: int) -> "mpq":
    """``base**exp`` in the fraction field; negative exponents allowed for nonzero base."""
    base = mpq(base)
    if exp >= 0:
        return base**exp
    if base == 0:
        raise ZeroDivisionError("0 raised to a negative power")
    return mpq(1) / base ** (-exp)


__all__ = [
    "Q",
    "Rational",
    "RationalLike",
    "as_int",
    "format_rational",
    "is_integer",
    "mpq",
    "mpz",
    "parse_rational",
    "qpow",
    "to_fraction",
]
