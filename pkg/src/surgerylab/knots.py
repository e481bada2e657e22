"""
Pretzel knots P(-2, p, q), torus knots, diagram statistics of the knots
K_{p+-} and the exceptional surgery classifier for P(-2, p, q).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd

from .slopes import Slope, as_slope


def _check_odd(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an integer")
    if value % 2 == 0:
        raise ValueError(f"{name} must be odd")
    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}")


def sign_value(sign) -> int:
    """Accept ``'+'``/``'-'`` or ``+1``/``-1``."""
    if sign in ("+", 1):
        return 1
    if sign in ("-", -1):
        return -1
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True)
class PretzelKnot:
    """The (-2, p, q) pretzel knot, stored with p <= q."""
    p: int
    q: int

    def __post_init__(self):
        _check_odd("p", self.p, 3)
        _check_odd("q", self.q, 3)
        if self.p > self.q:
            a, b = self.q, self.p
            object.__setattr__(self, "p", a)
            object.__setattr__(self, "q", b)

    def __str__(self):
        return f"P(-2,{self.p},{self.q})"


@dataclass(frozen=True)
class TorusKnot:
    x: int
    y: int

    def __post_init__(self):
        if self.x < 2 or abs(self.y) < 2:
            raise ValueError("torus knot needs x >= 2 and |y| >= 2")
        if gcd(self.x, abs(self.y)) != 1:
            raise ValueError(f"T({self.x},{self.y}) is a link: gcd != 1")

    def __str__(self):
        return f"T({self.x},{self.y})"


# P(-2,3,3) = T(3,4) and P(-2,3,5) = T(3,5)
NON_HYPERBOLIC = {(3, 3): TorusKnot(3, 4), (3, 5): TorusKnot(3, 5)}


def is_hyperbolic_pretzel(p: int, q: int) -> bool:
    k = PretzelKnot(p, q)
    return (k.p, k.q) not in NON_HYPERBOLIC


def surface_slope(p: int, q: int) -> int:
    """Boundary slope of the genus two Heegaard surface: 2(p + q)."""
    k = PretzelKnot(p, q)
    return 2 * (k.p + k.q)


@dataclass(frozen=True)
class KpDiagramStats:
    writhe: int
    seifert_circles: int
    braid_index_upper: int


def kp_diagram_stats(p: int, sign) -> KpDiagramStats:
    """Statistics of the four-braid diagram of K_{p+-}.

    The writhe counts ``4p - 8 + 2p - 4 +- 1`` crossings of the braid closure.
    """
    _check_odd("p", p, 5)
    e = sign_value(sign)
    return KpDiagramStats(writhe=6 * p - 12 + e, seifert_circles=4,
                          braid_index_upper=4)


class Verdict(str, Enum):
    HYPERBOLIC = "Hyperbolic"
    TOROIDAL = "Toroidal"
    SEIFERT_FIBERED = "SeifertFibered"
    REDUCIBLE = "Reducible"
    LENS = "Lens"
    OUT_OF_SCOPE = "OutOfScope"


KLEIN_BOTTLE_PIECE = "twisted I-bundle over the Klein bottle"


@dataclass(frozen=True)
class SurgeryClassification:
    verdict: Verdict
    pieces: tuple = ()
    seifert_data: dict = None
    reason: str = None
    knot: PretzelKnot = None
    slope: Slope = None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "pieces": [dict(piece) for piece in self.pieces],
            "seifert_data": self.seifert_data,
            "reason": self.reason,
        }


def _toroidal(knot: PretzelKnot, r: Slope) -> SurgeryClassification:
    from .magic import classify_mpq, mpq_filling

    filling = mpq_filling(knot.p, knot.q)
    piece = classify_mpq(knot.p, knot.q)
    magic_piece = {
        "kind": "magic filling",
        "filling": [str(s) for s in filling.slopes],
        "classification": piece.to_json(),
    }
    return SurgeryClassification(
        Verdict.TOROIDAL,
        pieces=({"kind": KLEIN_BOTTLE_PIECE}, magic_piece),
        seifert_data=piece.seifert_data(),
        reason=f"surface slope 2(p+q) = {surface_slope(knot.p, knot.q)}",
        knot=knot, slope=r)


def classify_surgery(p: int, q: int, r) -> SurgeryClassification:
    """Classify r-surgery on the hyperbolic pretzel knot P(-2, p, q).

    The toroidal slope is 2(p+q).  For p = q every other slope is
    hyperbolic; for p != q the remaining slopes are out of scope.
    """
    knot = PretzelKnot(p, q)
    if not is_hyperbolic_pretzel(knot.p, knot.q):
        raise ValueError(f"{knot} = {NON_HYPERBOLIC[knot.p, knot.q]} is not hyperbolic")
    r = as_slope(r)
    toroidal = Slope(surface_slope(knot.p, knot.q), 1)
    if r == toroidal:
        return _toroidal(knot, r)
    if knot.p == knot.q:
        return SurgeryClassification(
            Verdict.HYPERBOLIC,
            reason="not reducible, not Seifert fibered and not toroidal",
            knot=knot, slope=r)
    return SurgeryClassification(
        Verdict.OUT_OF_SCOPE,
        reason="Seifert/hyperbolic dichotomy not established for p != q",
        knot=knot, slope=r)
