"""
Cusp cross-sections and peripheral curves.

The cross-section of cusp ``c`` is the triangulated torus made of the vertex
triangles ``(t, v)`` with ``cusp_of[t][v] == c``.  The corners of ``(t, v)``
are the other three vertices ``k`` of ``t``; the side opposite corner ``x``
lies in face ``x`` of ``t``.

A closed curve is a cyclic sequence of steps ``(t, v, x_in, x_out)``: it
enters triangle ``(t, v)`` through the side opposite ``x_in`` and leaves
through the side opposite ``x_out``, cutting off the remaining corner.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import EDGE_INDEX, EDGE_SHAPE_TYPE, IdealTriangulation, vertex_order_ccw


def _third(v, a, b):
    return 6 - v - a - b


def corner_on_right(v, x_in, x_out) -> bool:
    k = _third(v, x_in, x_out)
    return vertex_order_ccw(v, x_in, x_out, k)


def side_id(T: IdealTriangulation, t, v, x):
    u, perm = T.glue(t, x)
    return min((t, v, x), (u, perm[v], perm[x]))


def _to_frame(T, t, v, x, corner, target):
    """Express ``corner`` of side ``(t, v, x)`` in the triangle ``target``."""
    if (t, v, x) == target:
        return corner
    u, perm = T.glue(t, x)
    assert (u, perm[v], perm[x]) == target
    return perm[corner]


@dataclass(frozen=True)
class Curve:
    steps: tuple

    def corner_counts(self, T: IdealTriangulation) -> np.ndarray:
        """Signed count of corners cut off, as an ``(n, 3)`` array over
        (z, z', z'') per tetrahedron; corners on the left count +1."""
        counts = np.zeros((T.num_tetrahedra, 3), dtype=np.int64)
        for t, v, x_in, x_out in self.steps:
            k = _third(v, x_in, x_out)
            sign = -1 if corner_on_right(v, x_in, x_out) else 1
            counts[t, EDGE_SHAPE_TYPE[EDGE_INDEX[frozenset((v, k))]]] += sign
        return counts

    def push_left(self, T):
        """Directed sides of the cross-section forming a path homotopic to
        this curve, pushed off to its left."""
        path = []
        for t, v, x_in, x_out in self.steps:
            k = _third(v, x_in, x_out)
            if corner_on_right(v, x_in, x_out):
                # side x_out -> x_in, opposite k
                path.append((t, v, k, x_out))
        return path


def intersection_with_path(T, curve: Curve, path) -> int:
    """Algebraic intersection of ``curve`` with a directed side path.

    A crossing from the left of a directed side to its right counts +1.
    """
    by_side = {}
    for t, v, k, start in path:
        by_side.setdefault(side_id(T, t, v, k), []).append((t, v, k, start))
    total = 0
    for t, v, x_in, x_out in curve.steps:
        sid = side_id(T, t, v, x_out)
        for pt, pv, pk, start in by_side.get(sid, ()):
            p = _to_frame(T, pt, pv, pk, start, (t, v, x_out))
            q = _third(v, x_out, p)
            # interior of (t, v) lies left of p -> q iff (p, q, x_out) is ccw
            total += 1 if vertex_order_ccw(v, p, q, x_out) else -1
    return total


def intersection_number(T, a: Curve, b: Curve) -> int:
    return intersection_with_path(T, b, a.push_left(T))


def fundamental_cycles(T: IdealTriangulation, cusp: int):
    """Fundamental cycles of the dual graph of the cusp cross-section."""
    triangles = T.cusp_triangles(cusp)
    root = triangles[0]
    parent = {root: None}
    order = [root]
    queue = deque([root])
    tree_sides = set()
    while queue:
        t, v = queue.popleft()
        for x in range(4):
            if x == v:
                continue
            u, perm = T.glue(t, x)
            nb = (u, perm[v])
            if nb not in parent:
                parent[nb] = ((t, v), x, perm[x])
                tree_sides.add(side_id(T, t, v, x))
                order.append(nb)
                queue.append(nb)

    def up_path(node):
        path = [node]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]][0])
        return path

    cycles = []
    seen = set()
    for t, v in order:
        for x in range(4):
            if x == v:
                continue
            sid = side_id(T, t, v, x)
            if sid in tree_sides or sid in seen:
                continue
            seen.add(sid)
            u, perm = T.glue(t, x)
            a, b = (t, v), (u, perm[v])
            pa, pb = up_path(a), up_path(b)
            common = set(pa) & set(pb)
            lca = next(n for n in pa if n in common)
            down = list(reversed(pa[:pa.index(lca) + 1]))   # lca ... a
            back = pb[:pb.index(lca)]                         # b ... child of lca
            seq = down + back
            # transitions[i] = (exit side of seq[i], entry side of seq[i+1])
            transitions = []
            for i in range(len(down) - 1):
                child = down[i + 1]
                _, pexit, centry = parent[child]
                transitions.append((pexit, centry))
            transitions.append((x, perm[x]))
            for i in range(len(back)):
                node = back[i]
                _, pexit, centry = parent[node]
                transitions.append((centry, pexit))
            m = len(seq)
            assert len(transitions) == m
            steps = []
            for i, (tt, vv) in enumerate(seq):
                x_in = transitions[i - 1][1]
                x_out = transitions[i][0]
                steps.append((tt, vv, x_in, x_out))
            cycles.append(Curve(tuple(steps)))
    return cycles


def traced_basis(T: IdealTriangulation, cusp: int):
    """Integer combinations of fundamental cycles forming a basis ``(m0, l0)``
    of the first homology of the cusp torus with ``i(m0, l0) = +1``.

    Returns ``(cycles, m_coeffs, l_coeffs)``.
    """
    cycles = fundamental_cycles(T, cusp)
    k = len(cycles)
    paths = [c.push_left(T) for c in cycles]
    I = np.zeros((k, k), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            if i != j:
                I[i, j] = intersection_with_path(T, cycles[j], paths[i])
    for i in range(k):
        for j in range(i + 1, k):
            if abs(I[i, j]) == 1:
                m = np.zeros(k, dtype=np.int64)
                l = np.zeros(k, dtype=np.int64)
                if I[i, j] == 1:
                    m[i], l[j] = 1, 1
                else:
                    m[j], l[i] = 1, 1
                return cycles, m, l
    # general case: reduce the lattice spanned by all cycles
    nz = np.argwhere(I != 0)
    if len(nz) == 0:
        raise ValueError(f"cusp {cusp}: fundamental cycles span no lattice")
    a, b = nz[0]
    d = int(I[a, b])
    # rows: (d * coordinates in the basis a, b | combination of cycles)
    M = [[int(I[c, b]), int(I[a, c])] + [int(c == j) for j in range(k)]
         for c in range(k)]
    _row_hermite(M, 2)
    u1, u2 = M[0], M[1]
    det = u1[0] * u2[1] - u1[1] * u2[0]
    if abs(det) != abs(d):
        raise ValueError(f"cusp {cusp}: lattice reduction failed")
    m = np.array(u1[2:], dtype=np.int64)
    l = np.array(u2[2:], dtype=np.int64)
    if det * d < 0:
        l = -l
    return cycles, m, l


def _row_hermite(M, ncols):
    """In-place unimodular row reduction of the first ``ncols`` columns."""
    r = 0
    for col in range(ncols):
        while True:
            rows = [i for i in range(r, len(M)) if M[i][col] != 0]
            if not rows:
                break
            piv = min(rows, key=lambda i: abs(M[i][col]))
            M[r], M[piv] = M[piv], M[r]
            done = True
            for i in range(r + 1, len(M)):
                if M[i][col]:
                    q = M[i][col] // M[r][col]
                    M[i] = [x - q * y for x, y in zip(M[i], M[r])]
                    done = done and M[i][col] == 0
            if done:
                r += 1
                break


@lru_cache(maxsize=None)
def peripheral_counts(T: IdealTriangulation):
    """Per cusp, signed corner-count arrays ``(m, l)`` of the peripheral
    basis (traced basis composed with the file's basis change)."""
    out = []
    for c in range(T.num_cusps):
        cycles, mc, lc = traced_basis(T, c)
        rows = [cy.corner_counts(T) for cy in cycles]
        m0 = sum(int(x) * r for x, r in zip(mc, rows))
        l0 = sum(int(x) * r for x, r in zip(lc, rows))
        basis = T.cusp_bases[c]
        if basis is not None:
            (a, b), (cc, d) = basis
            m0, l0 = a * m0 + b * l0, cc * m0 + d * l0
        out.append((m0, l0))
    return tuple(out)
