"""First homology of a triangulated cusped manifold."""
from functools import lru_cache

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from .core import EDGES, IdealTriangulation
from .cusps import traced_basis


def _face_pairs(T):
    index = {}
    for t in range(T.num_tetrahedra):
        for f in range(4):
            u, perm = T.glue(t, f)
            key = min((t, f), (u, perm[f]))
            index.setdefault(key, len(index))
    return index


def _crossing(T, pairs, t, f):
    u, perm = T.glue(t, f)
    key = min((t, f), (u, perm[f]))
    return pairs[key], (1 if key == (t, f) else -1)


@lru_cache(maxsize=None)
def _smith(T: IdealTriangulation):
    """Relations of H_1 over the face-pair generators, in Smith form.

    Generators are the dual edges (glued face pairs); relations are the
    dual spanning tree and one loop around each edge class.
    """
    pairs = _face_pairs(T)
    relations = []
    seen = {0}
    queue = [0]
    while queue:
        t = queue.pop()
        for f in range(4):
            u, _ = T.glue(t, f)
            if u not in seen:
                seen.add(u)
                queue.append(u)
                row = [0] * len(pairs)
                row[_crossing(T, pairs, t, f)[0]] = 1
                relations.append(row)
    for cls in T.edge_classes:
        t, e = cls[0]
        a, b = EDGES[e]
        c = next(x for x in range(4) if x not in (a, b))
        row = [0] * len(pairs)
        start = cur = (t, a, b, c)
        while True:
            t, a, b, exit_face = cur
            i, s = _crossing(T, pairs, t, exit_face)
            row[i] += s
            u, perm = T.glue(t, exit_face)
            na, nb, entered = perm[a], perm[b], perm[exit_face]
            cur = (u, na, nb, next(x for x in range(4) if x not in (na, nb, entered)))
            if cur == start:
                break
        relations.append(row)
    D, U, V = smith_normal_decomp(Matrix(relations))
    diag = [abs(int(D[i, i])) for i in range(min(D.shape))]
    return pairs, diag, np.array(V.tolist(), dtype=np.int64)


def first_homology(T: IdealTriangulation):
    """Return ``(betti_number, torsion)`` with torsion coefficients > 1."""
    pairs, diag, _ = _smith(T)
    rank = sum(1 for d in diag if d != 0)
    return len(pairs) - rank, tuple(sorted(d for d in diag if d > 1))


def curve_class(T: IdealTriangulation, curve) -> np.ndarray:
    """Free part of the homology class of a cusp curve."""
    pairs, diag, V = _smith(T)
    x = np.zeros(len(pairs), dtype=np.int64)
    for t, v, x_in, x_out in curve.steps:
        i, s = _crossing(T, pairs, t, x_out)
        x[i] += s
    rank = sum(1 for d in diag if d != 0)
    return (x @ V)[rank:]


def peripheral_classes(T: IdealTriangulation):
    """Per cusp, the homology classes of the peripheral basis ``(m, l)``."""
    out = []
    for c in range(T.num_cusps):
        cycles, mc, lc = traced_basis(T, c)
        classes = [curve_class(T, cy) for cy in cycles]
        m0 = sum(int(x) * k for x, k in zip(mc, classes))
        l0 = sum(int(x) * k for x, k in zip(lc, classes))
        basis = T.cusp_bases[c]
        if basis is not None:
            (a, b), (cc, d) = basis
            m0, l0 = a * m0 + b * l0, cc * m0 + d * l0
        out.append((m0, l0))
    return out
