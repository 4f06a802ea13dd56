"""
Exact rational scalars.

Every coefficient handled by pyOperadic is a ``fractions.Fraction``. Floats are
refused at every entry point so that no rounding can leak into a verdict.
"""

from fractions import Fraction
import re

import sympy

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ScalarFormatError(ValueError):
    pass


def to_scalar(value) -> Fraction:
    """Coerce an int, Fraction or rational string to a Scalar."""
    if isinstance(value, bool):
        raise ScalarFormatError("Booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ScalarFormatError(
        "Scalars must be int, Fraction or rational strings, not {}".format(type(value))
    )


def parse_scalar(text: str) -> Fraction:
    """Parse "p" or "p/q". Decimal points and exponents are rejected."""
    match = _RATIONAL.match(text)
    if match is None:
        raise ScalarFormatError("'{}' is not a rational number of the form p or p/q".format(text))
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ScalarFormatError("Zero denominator in '{}'".format(text))
    return Fraction(num, den)


def format_scalar(x: Fraction) -> str:
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "{}/{}".format(x.numerator, x.denominator)


def parse_csv(text: str) -> list:
    """Parse a comma separated list of rationals, e.g. "1,0,-1/2"."""
    parts = [p for p in text.split(",")]
    if len(parts) == 0 or any(p.strip() == "" for p in parts):
        raise ScalarFormatError("Malformed rational list '{}'".format(text))
    return [parse_scalar(p) for p in parts]


def to_sympy(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def from_sympy(q) -> Fraction:
    """Convert a sympy rational; anything irrational raises."""
    q = sympy.Rational(q)
    return Fraction(int(q.p), int(q.q))
