"""
Moser's classification of Dehn surgery on torus knots.

For a/b surgery on T(x, y) let sigma = a - b*x*y.  Then the result is a lens
space when |sigma| = 1, the connected sum of two lens spaces when sigma = 0,
and otherwise Seifert fibred over S^2 with fibres of multiplicity x, y and
|sigma|.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .slopes import as_slope, factor_knot_slope


@dataclass(frozen=True)
class TorusSurgeryVerdict:
    kind: str                  # Lens, Reducible, SeifertFibered or Trivial
    order: int = None          # |H_1| of the lens space
    factors: tuple = None      # orders of the two lens space summands
    fibers: tuple = None

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.order is not None:
            out["order"] = self.order
        if self.factors is not None:
            out["factors"] = list(self.factors)
        if self.fibers is not None:
            out["fibers"] = list(self.fibers)
        return out


TRIVIAL_FILLING = TorusSurgeryVerdict("Trivial")   # the meridian gives back S^3


def discriminant(x: int, y: int, slope) -> int:
    s = as_slope(slope)
    return s.numerator - s.denominator * x * y


def classify_torus_surgery(x: int, y: int, slope) -> TorusSurgeryVerdict:
    if min(abs(x), abs(y)) < 2:
        raise ValueError("torus knot needs |x|, |y| >= 2")
    if gcd(abs(x), abs(y)) != 1:
        raise ValueError(f"gcd({x}, {y}) != 1")
    s = as_slope(slope)
    if s.is_infinity:
        return TRIVIAL_FILLING
    sigma = discriminant(x, y, s)
    if abs(sigma) == 1:
        return TorusSurgeryVerdict("Lens", order=abs(s.numerator))
    if sigma == 0:
        return TorusSurgeryVerdict("Reducible", factors=(abs(x), abs(y)))
    return TorusSurgeryVerdict("SeifertFibered", fibers=(abs(x), abs(y), abs(sigma)))


def lens_slopes_for_factor_knot(p: int, window: int) -> list:
    """Integers r with |r - 4p| <= window whose quotient surgery r/2 on the
    factor knot T(2, p) is a lens space.

    Only odd r are scanned: for even r the class (r, 2) is not primitive, so
    the quotient of K(r) by the period is not a Dehn surgery on T(2, p).
    """
    if p % 2 == 0 or p < 5:
        raise ValueError("p must be odd and >= 5")
    if window < 0:
        raise ValueError("window must be non-negative")
    out = []
    for r in range(4 * p - window, 4 * p + window + 1):
        if r % 2 == 0:
            continue
        if classify_torus_surgery(2, p, factor_knot_slope(r)).kind == "Lens":
            out.append(r)
    return out
