"""
Combinatorial isomorphism of oriented ideal triangulations.

An orientation preserving isomorphism is fixed by the image of a single
tetrahedron together with an even vertex relabelling of it; everything else
follows by walking across faces.  So instead of searching over all
bijections we try each of the ``n * 12`` starting choices and propagate.
"""
from __future__ import annotations

import random

from .core import (EVEN_PERMS, IdealTriangulation, perm_compose, perm_inverse,
                   relabel)

# first-discovery gluings are relabelled to this fixed odd permutation
_TAU = (1, 0, 2, 3)


def _labelling(T: IdealTriangulation, start: int, sigma):
    """Relabel ``T`` by walking outward from ``start`` with vertex map
    ``sigma``.  Returns ``(tet_map, vertex_perms)``, or None if ``T`` is not
    connected."""
    n = T.num_tetrahedra
    tet_map = [None] * n
    perms = [None] * n
    tet_map[start], perms[start] = 0, tuple(sigma)
    order = [start]
    i = 0
    while i < len(order):
        t = order[i]
        inv = perm_inverse(perms[t])
        for new_face in range(4):
            f = inv[new_face]
            u, perm = T.glue(t, f)
            if tet_map[u] is None:
                tet_map[u] = len(order)
                perms[u] = perm_compose(_TAU, perm_compose(perms[t], perm_inverse(perm)))
                order.append(u)
        i += 1
    if len(order) != n:
        return None
    return tet_map, perms


def _key_row(T, tet_map, perms, t):
    s = perms[t]
    s_inv = perm_inverse(s)
    row = [None] * 4
    for f in range(4):
        u, perm = T.glue(t, f)
        row[s[f]] = (tet_map[u], perm_compose(perms[u], perm_compose(perm, s_inv)))
    return tuple(row)


def _gluing_key(T, tet_map, perms):
    out = [None] * T.num_tetrahedra
    for t in range(T.num_tetrahedra):
        out[tet_map[t]] = _key_row(T, tet_map, perms, t)
    return tuple(out)


def _matches(T, tet_map, perms, target):
    # row by row, so most candidates are rejected after one tetrahedron
    for t in sorted(range(T.num_tetrahedra), key=tet_map.__getitem__):
        if _key_row(T, tet_map, perms, t) != target[tet_map[t]]:
            return False
    return True


def canonical_key(T: IdealTriangulation):
    """A key equal for two triangulations exactly when they are isomorphic
    by an orientation preserving relabelling."""
    best = None
    for start in range(T.num_tetrahedra):
        for sigma in EVEN_PERMS:
            lab = _labelling(T, start, sigma)
            if lab is None:
                raise ValueError("triangulation is not connected")
            key = _gluing_key(T, *lab)
            if best is None or key < best:
                best = key
    return best


def isomorphic(T1: IdealTriangulation, T2: IdealTriangulation):
    """Search for an orientation preserving combinatorial isomorphism.

    Returns ``(True, (tet_map, vertex_perms))`` with ``relabel(T1, ...)``
    having the same gluings as ``T2``, or ``(False, None)``.
    """
    if T1.num_tetrahedra != T2.num_tetrahedra or T1.num_cusps != T2.num_cusps:
        return False, None
    ref = _labelling(T2, 0, EVEN_PERMS[0])
    if ref is None:
        raise ValueError("triangulation is not connected")
    target = _gluing_key(T2, *ref)
    ref_map, ref_perms = ref
    back = {new: old for old, new in enumerate(ref_map)}
    for start in range(T1.num_tetrahedra):
        for sigma in EVEN_PERMS:
            lab = _labelling(T1, start, sigma)
            if lab is None:
                raise ValueError("triangulation is not connected")
            if not _matches(T1, *lab, target):
                continue
            # compose with the inverse of T2's labelling
            tet_map, perms = lab
            witness_map = [back[tet_map[t]] for t in range(T1.num_tetrahedra)]
            witness_perms = [perm_compose(perm_inverse(ref_perms[witness_map[t]]), perms[t])
                             for t in range(T1.num_tetrahedra)]
            return True, (witness_map, witness_perms)
    return False, None


def random_relabelling(T: IdealTriangulation, rng=None) -> IdealTriangulation:
    """Shuffle tetrahedra and apply random even vertex relabellings."""
    rng = rng or random.Random()
    tet_map = list(range(T.num_tetrahedra))
    rng.shuffle(tet_map)
    perms = [EVEN_PERMS[int(rng.choice(range(len(EVEN_PERMS))))] for _ in tet_map]
    return relabel(T, tet_map, perms)
