"""
Dehn fillings of the magic manifold N, the exterior of the three component
chain link.

Slopes use the standard meridian/longitude of each chain component.  Any
two boundary components of N can be interchanged, so fillings are
multisets.
"""
from __future__ import annotations

from dataclasses import dataclass

from .slopes import INFINITY, Slope, as_slope, normalize

EXCEPTIONAL_SLOPES = frozenset({INFINITY, Slope(-3, 1), Slope(-2, 1),
                                Slope(-1, 1), Slope(0, 1)})
def _slope_key(s):
    # numeric order with the meridian last
    return (1, 0) if s.is_infinity else (0, s.as_fraction())


EXCEPTIONAL_PAIRS = frozenset(
    tuple(sorted(pair, key=_slope_key)) for pair in (
        (Slope(1, 1), Slope(1, 1)),
        (Slope(-4, 1), Slope(-1, 2)),
        (Slope(-3, 2), Slope(-5, 2)),
    ))


@dataclass(frozen=True)
class MagicFilling:
    """At most three slopes, compared as a multiset."""
    slopes: tuple

    def __post_init__(self):
        slopes = tuple(sorted((as_slope(s) for s in self.slopes), key=_slope_key))
        if len(slopes) > 3:
            raise ValueError("N has only three cusps")
        object.__setattr__(self, "slopes", slopes)

    def __len__(self):
        return len(self.slopes)

    def __str__(self):
        return "N(" + ", ".join(str(s) for s in self.slopes) + ")"

    def to_json(self):
        return [str(s) for s in self.slopes]


def is_exceptional_filling(f) -> bool:
    """Table for fillings of two cusps of N.

    Exceptional iff a slope lies in {inf, -3, -2, -1, 0} or the pair is
    one of (1, 1), (-4, -1/2), (-3/2, -5/2) up to order.
    """
    if not isinstance(f, MagicFilling):
        f = MagicFilling(tuple(f))
    if len(f) != 2:
        raise ValueError("the table covers fillings of exactly two cusps")
    if any(s in EXCEPTIONAL_SLOPES for s in f.slopes):
        return True
    return f.slopes in EXCEPTIONAL_PAIRS


def _check_pq(p, q):
    for name, v in (("p", p), ("q", q)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{name} must be an integer")
        if v % 2 == 0:
            raise ValueError(f"{name} must be odd")
    if not 3 <= p <= q:
        raise ValueError("need 3 <= p <= q")


def mpq_filling(p: int, q: int) -> MagicFilling:
    """M_{p,q} = N(-(k+1)/k, -(l+1)/l) with p = 2k+1, q = 2l+1."""
    _check_pq(p, q)
    k, l = (p - 1) // 2, (q - 1) // 2
    return MagicFilling((normalize(-(k + 1), k), normalize(-(l + 1), l)))


@dataclass(frozen=True)
class MpqPiece:
    k: int
    l: int
    kind: str                       # "Hyperbolic" or "SFS"
    name: str = None
    annotation: str = None
    fibers: tuple = None            # SFS over the disk

    @property
    def p(self):
        return 2 * self.k + 1

    @property
    def q(self):
        return 2 * self.l + 1

    def seifert_data(self):
        if self.kind != "SFS":
            return None
        return {"base": "D", "fibers": [list(f) for f in self.fibers]}

    def to_json(self) -> dict:
        out = {"kind": self.kind, "p": self.p, "q": self.q}
        if self.name:
            out["name"] = self.name
        if self.annotation:
            out["annotation"] = self.annotation
        if self.kind == "SFS":
            out["seifert_data"] = self.seifert_data()
        return out


def classify_mpq(p: int, q: int) -> MpqPiece:
    """M_{3,q} is the Seifert fibred space (D, (3,1), (l-1,l)); every M_{p,q}
    with p >= 5 is hyperbolic."""
    _check_pq(p, q)
    if (p, q) in ((3, 3), (3, 5)):
        raise ValueError(f"P(-2,{p},{q}) is a torus knot")
    k, l = (p - 1) // 2, (q - 1) // 2
    if p == 3:
        return MpqPiece(k, l, "SFS", fibers=((3, 1), (l - 1, l)))
    name = "figure-8 knot sister" if (p, q) == (5, 5) else None
    # N(-3/2) is the Whitehead sister link exterior
    note = "Whitehead sister parent" if p == 5 else None
    return MpqPiece(k, l, "Hyperbolic", name=name, annotation=note)


def mpq_report(p: int, q: int) -> dict:
    f = mpq_filling(p, q)
    return {"filling": f.to_json(), "exceptional": is_exceptional_filling(f),
            "classification": classify_mpq(p, q).to_json()}
