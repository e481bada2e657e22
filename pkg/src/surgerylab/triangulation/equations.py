"""
Edge, completeness and Dehn filling equations.

Every equation is stored as signed corner counts ``(n, 3)`` over the three
corner parameters ``z, z' = 1/(1-z), z'' = 1 - 1/z`` of each tetrahedron,
together with a right-hand side ``rhs`` in units of ``pi*i``::

    sum counts * log(corner parameter) = rhs * pi * i

Edge equations have ``rhs = 2``.  Peripheral rows come from the traced
cusp curves; their turning numbers are removed by comparing against the
complete structure once per triangulation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from ..slopes import Slope, as_slope
from .core import EDGE_SHAPE_TYPE, IdealTriangulation
from .cusps import peripheral_counts
from .newton import newton

REGULAR_LOG_SHAPE = 1j * np.pi / 3


@dataclass(frozen=True)
class FillingInstruction:
    cusp: int
    slope: Optional[Slope] = None    # None keeps the cusp complete

    @property
    def complete(self) -> bool:
        return self.slope is None


@dataclass(frozen=True)
class Equation:
    kind: str                  # "edge", "meridian", "longitude", "filling"
    index: int                 # edge class or cusp
    counts: np.ndarray
    rhs: int

    def log_form(self):
        """``(a, b, c)`` with ``a.w + b.log(1 - z) = c*pi*i``."""
        cz, czp, czpp = self.counts[:, 0], self.counts[:, 1], self.counts[:, 2]
        return cz - czpp, czpp - czp, self.rhs - int(czpp.sum())


@dataclass(frozen=True)
class GluingSystem:
    equations: tuple
    num_tetrahedra: int

    def __len__(self):
        return len(self.equations)

    def rows(self, kind=None):
        return [e for e in self.equations if kind is None or e.kind == kind]

    def matrices(self):
        A, B, c = zip(*(e.log_form() for e in self.equations))
        return np.array(A), np.array(B), np.array(c)


def edge_equations(T: IdealTriangulation):
    out = []
    for i, cls in enumerate(T.edge_classes):
        counts = np.zeros((T.num_tetrahedra, 3), dtype=np.int64)
        for t, e in cls:
            counts[t, EDGE_SHAPE_TYPE[e]] += 1
        out.append(Equation("edge", i, counts, 2))
    return out


@lru_cache(maxsize=None)
def peripheral_rows(T: IdealTriangulation):
    """Per cusp ``((m_counts, m_turn), (l_counts, l_turn))`` where ``turn`` is
    the turning number of the traced curve, measured at the complete
    structure.  The calibrated holonomy is ``H - 2*pi*i*turn``."""
    curves = peripheral_counts(T)
    eqs = edge_equations(T)
    for c, (m, l) in enumerate(curves):
        eqs.append(Equation("meridian", c, m, 0))
        eqs.append(Equation("longitude", c, l, 0))
    A, B, cc = GluingSystem(tuple(eqs), T.num_tetrahedra).matrices()
    modular = np.array([e.kind != "edge" for e in eqs])
    w0 = np.full(T.num_tetrahedra, REGULAR_LOG_SHAPE)
    w, err, _, ok, diag = newton(A, B, cc, w0, modular=modular)
    if not ok:
        raise ValueError("cannot calibrate peripheral curves: complete "
                         f"structure not found ({diag})")
    raw = A @ w + B @ np.log(1 - np.exp(w)) - 1j * np.pi * cc
    out = []
    for c, (m, l) in enumerate(curves):
        turns = []
        for j, counts in ((2 * c, m), (2 * c + 1, l)):
            val = raw[T.num_tetrahedra + j]
            turns.append(int(round(val.imag / (2 * np.pi))))
        out.append(((m, turns[0]), (l, turns[1])))
    return tuple(out)


def normalize_fillings(T: IdealTriangulation, fillings) -> list:
    """Accept a list of instructions, or a dict ``{cusp: slope}`` with the
    remaining cusps complete."""
    if fillings is None:
        fillings = {}
    if isinstance(fillings, dict):
        for c in fillings:
            if not 0 <= c < T.num_cusps:
                raise ValueError(f"no cusp {c}")
        return [FillingInstruction(c, None if fillings.get(c) is None
                                   else as_slope(fillings[c]))
                for c in range(T.num_cusps)]
    return list(fillings)


def gluing_system(T: IdealTriangulation, fillings) -> GluingSystem:
    fillings = normalize_fillings(T, fillings)
    if len(fillings) != T.num_cusps or \
            sorted(f.cusp for f in fillings) != list(range(T.num_cusps)):
        raise ValueError(f"need exactly one filling instruction per cusp "
                         f"({T.num_cusps}), got {len(fillings)}")
    eqs = edge_equations(T)
    per = peripheral_rows(T)
    for f in sorted(fillings, key=lambda f: f.cusp):
        (m, tm), (l, tl) = per[f.cusp]
        if f.complete:
            eqs.append(Equation("meridian", f.cusp, m, 2 * tm))
            eqs.append(Equation("longitude", f.cusp, l, 2 * tl))
        else:
            p, q = f.slope.numerator, f.slope.denominator
            eqs.append(Equation("filling", f.cusp, p * m + q * l,
                                2 + 2 * (p * tm + q * tl)))
    return GluingSystem(tuple(eqs), T.num_tetrahedra)
