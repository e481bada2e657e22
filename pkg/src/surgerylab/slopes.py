"""
Surgery slopes as normalized coprime pairs.

A slope ``a/b`` is stored with ``gcd(|a|, b) == 1`` and ``b >= 0``; the
point at infinity (the meridian) is ``1/0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

INFINITY_SYMBOL = "∞"


@dataclass(frozen=True, order=True)
class Slope:
    numerator: int
    denominator: int

    def __post_init__(self):
        a, b = self.numerator, self.denominator
        if b < 0 or gcd(abs(a), b) != 1 or (b == 0 and a != 1):
            raise ValueError(f"{a}/{b} is not a normalized slope; use normalize()")

    @property
    def is_infinity(self) -> bool:
        return self.denominator == 0

    def as_fraction(self) -> Fraction:
        if self.is_infinity:
            raise ValueError("the slope 1/0 has no rational value")
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        if self.is_infinity:
            return INFINITY_SYMBOL
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"

    def __repr__(self):
        return f"Slope({self})"


def normalize(a: int, b: int = 1) -> Slope:
    a, b = int(a), int(b)
    if a == 0 and b == 0:
        raise ValueError("0/0 is not a slope")
    g = gcd(abs(a), abs(b))
    a, b = a // g, b // g
    if b < 0 or (b == 0 and a < 0):
        a, b = -a, -b
    return Slope(a, b)


INFINITY = Slope(1, 0)


def as_slope(x) -> Slope:
    """Coerce ints, Fractions, ``(a, b)`` pairs and strings to a slope."""
    if isinstance(x, Slope):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not slopes")
    if isinstance(x, int):
        return normalize(x, 1)
    if isinstance(x, Fraction):
        return normalize(x.numerator, x.denominator)
    if isinstance(x, tuple) and len(x) == 2:
        return normalize(*x)
    if isinstance(x, str):
        return parse_slope(x)
    raise TypeError(f"cannot interpret {x!r} as a slope")


def parse_slope(text: str) -> Slope:
    s = text.strip()
    if s in (INFINITY_SYMBOL, "inf", "infinity", "oo"):
        return INFINITY
    if "/" in s:
        num, den = s.split("/", 1)
        return normalize(int(num), int(den))
    return normalize(int(s), 1)


def geometric_intersection(s: Slope, t: Slope) -> int:
    """Minimal intersection number ``|p*s' - q*r'|`` of two slopes."""
    return abs(s.numerator * t.denominator - s.denominator * t.numerator)


def chain_slope_map(s: Slope) -> Slope:
    """Slope on a chain-link cusp corresponding to ``p/q`` on ``T_1``:
    ``p/q -> (p - q)/q``."""
    return normalize(s.numerator - s.denominator, s.denominator)


def factor_knot_slope(r: int) -> Slope:
    """Integer surgery on a 2-periodic knot descends to ``r/2`` on the factor."""
    return normalize(r, 2)
