"""Exact integer / rational arithmetic for every formula in the package.

Python ints are already arbitrary precision and ``fractions.Fraction`` is
always stored reduced with a positive denominator, so ExactInt and
ExactRational are plain aliases. This module adds the few conventions the
formulas need on top:

  binomial()      C(n, k), returning 0 for k outside 0..n
  rational_*()    field operations (thin, but they give the formulas one
                  vocabulary and coerce ints on the way in)
  to_integer()    demote a rational to an int, or fail loudly

Nothing in the package ever touches float.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import NonIntegralError

ExactInt = int
ExactRational = Fraction

# Anything the rational helpers accept on input.
RationalLike = Union[int, Fraction]


def binomial(n: int, k: int) -> ExactInt:
    """Return C(n, k); 0 when k < 0 or k > n.

    Raises ValueError for negative n.
    """
    if n < 0:
        raise ValueError(f"binomial() needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def as_rational(value: RationalLike | str) -> ExactRational:
    """Coerce an int, Fraction or "p/q" string to a Fraction.

    Floats are refused: a float has already lost exactness.
    """
    if isinstance(value, float):
        raise TypeError("floating-point input is not accepted")
    return Fraction(value)


def rational_add(a: RationalLike, b: RationalLike) -> ExactRational:
    return Fraction(a) + Fraction(b)


def rational_mul(a: RationalLike, b: RationalLike) -> ExactRational:
    return Fraction(a) * Fraction(b)


def rational_neg(a: RationalLike) -> ExactRational:
    return -Fraction(a)


def rational_div(a: RationalLike, b: RationalLike) -> ExactRational:
    """a / b. Raises ZeroDivisionError when b == 0."""
    b = Fraction(b)
    if b == 0:
        raise ZeroDivisionError("rational_div() by zero")
    return Fraction(a) / b


def to_integer(x: RationalLike, what: str = "value") -> ExactInt:
    """Return x as an int if its denominator is 1, else raise NonIntegralError.

    ``what`` names the quantity in the error message.
    """
    x = Fraction(x)
    if x.denominator != 1:
        raise NonIntegralError(f"{what} is not an integer: {x}")
    return x.numerator


def format_exact(x: RationalLike) -> str:
    """Canonical string form: decimal integer, or "p/q" with q > 0 and gcd 1."""
    return str(Fraction(x))
