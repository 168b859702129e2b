"""Exact rational scalars and their signs.

Every coefficient in this package is a :class:`fractions.Fraction`.  Fractions
are kept in lowest terms with a positive denominator by the standard library,
so equality is structural and no operation ever rounds.  Only field operations
and order comparisons are used downstream.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from numbers import Rational
from typing import Union

from .errors import ScalarError

Scalar = Fraction
ScalarLike = Union[Fraction, int, str]

_SCALAR_RE = re.compile(r"^\s*([+-]?\d+)(?:/(\d+))?\s*$")


class Sign(enum.IntEnum):
    NEG = -1
    ZERO = 0
    POS = 1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return NotImplemented

    def __neg__(self):
        return Sign(-int(self))

    @property
    def symbol(self) -> str:
        return {Sign.NEG: "-", Sign.ZERO: "0", Sign.POS: "+"}[self]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def make_scalar(num: int, den: int = 1) -> Fraction:
    """Return ``num/den`` in canonical form.

    >>> make_scalar(6, 4)
    Fraction(3, 2)
    >>> make_scalar(3, -6)
    Fraction(-1, 2)
    """
    if den == 0:
        raise ScalarError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_scalar(x: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into a Scalar.

    Floats are refused: they would smuggle rounding into exact paths.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional sign on p)."""
    m = _SCALAR_RE.match(text)
    if m is None:
        raise ScalarError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ScalarError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_scalar(x: Fraction) -> str:
    """Inverse of :func:`parse_scalar`; integers print without ``/1``."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sign_of(x: Fraction) -> Sign:
    if x > 0:
        return Sign.POS
    if x < 0:
        return Sign.NEG
    return Sign.ZERO


def compare(x: Fraction, y: Fraction) -> Ordering:
    # cross-multiplication; denominators are positive so the direction holds
    lhs = x.numerator * y.denominator
    rhs = y.numerator * x.denominator
    if lhs < rhs:
        return Ordering.LESS
    if lhs > rhs:
        return Ordering.GREATER
    return Ordering.EQUAL
