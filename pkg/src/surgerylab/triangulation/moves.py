"""
Pachner 2-3 and 3-2 moves.

Both moves remove a few tetrahedra and fill the same region with new ones.
Vertices of the removed tetrahedra get names; each new tetrahedron is a
positively ordered 4-tuple of names, and every new gluing is found by
matching names across faces.
"""
from __future__ import annotations

from .core import (EDGES, IdealTriangulation, TriangulationError, perm_inverse,
                   perm_sign)


def _retriangulate(T: IdealTriangulation, removed, names, new_tets):
    """``names[t]`` lists the vertex names of removed tet ``t``; ``new_tets``
    are name 4-tuples in positive order."""
    keep = [t for t in range(T.num_tetrahedra) if t not in removed]
    index = {t: i for i, t in enumerate(keep)}
    base = len(keep)

    def face_key(vs, f):
        return frozenset(v for i, v in enumerate(vs) if i != f)

    new_faces = {}
    for n, vs in enumerate(new_tets):
        for f in range(4):
            new_faces.setdefault(face_key(vs, f), []).append((n, f))
    old_faces = {}
    for t in removed:
        for f in range(4):
            old_faces[face_key(names[t], f)] = (t, f)

    gluings = [[None] * 4 for _ in range(base + len(new_tets))]
    for i, t in enumerate(keep):
        for f in range(4):
            u, perm = T.glue(t, f)
            if u not in removed:
                gluings[i][f] = (index[u], perm)

    def via_names(src, dst):
        # perm sending positions of ``src`` to positions of the same names in
        # ``dst``; the one unmatched name goes to the unmatched slot
        perm = [None] * 4
        for i, v in enumerate(src):
            if v in dst:
                perm[i] = dst.index(v)
        free = ({0, 1, 2, 3} - set(p for p in perm if p is not None)).pop()
        perm[perm.index(None)] = free
        return tuple(perm)

    for n, vs in enumerate(new_tets):
        for f in range(4):
            key = face_key(vs, f)
            others = [x for x in new_faces[key] if x != (n, f)]
            if others:
                m, _ = others[0]
                gluings[base + n][f] = (base + m, via_names(vs, new_tets[m]))
                continue
            if key not in old_faces:
                raise TriangulationError("move left a face without a partner")
            t, g = old_faces[key]
            # new local -> old local of t
            to_old = via_names(vs, names[t])
            u, perm = T.glue(t, g)
            composed = tuple(perm[to_old[i]] for i in range(4))
            if u in removed:
                # land in the new tet that now holds face (u, perm[g])
                ukey = face_key(names[u], perm[g])
                m, _ = new_faces[ukey][0]
                to_new = via_names(names[u], new_tets[m])
                gluings[base + n][f] = (base + m, tuple(to_new[x] for x in composed))
            else:
                gluings[base + n][f] = (index[u], composed)
                gluings[index[u]][perm[g]] = (base + n, perm_inverse(composed))

    # keep the cusp order of T
    name_cusp = {}
    for t in removed:
        for i, v in enumerate(names[t]):
            name_cusp[v] = T.cusp_of[t][i]
    reps = [None] * T.num_cusps
    for i, t in enumerate(keep):
        for v in range(4):
            c = T.cusp_of[t][v]
            if reps[c] is None:
                reps[c] = (i, v)
    for n, vs in enumerate(new_tets):
        for v, name in enumerate(vs):
            c = name_cusp[name]
            if reps[c] is None:
                reps[c] = (base + n, v)
    return IdealTriangulation(tuple(tuple(r) for r in gluings), tuple(reps))


def two_three(T: IdealTriangulation, t: int, f: int) -> IdealTriangulation:
    """Replace the two distinct tetrahedra meeting at face ``f`` of ``t`` by
    three tetrahedra around a new edge."""
    u, perm = T.glue(t, f)
    if u == t:
        raise TriangulationError("2-3 move needs two distinct tetrahedra")
    inv = perm_inverse(perm)
    names = {t: [("a", i) for i in range(4)],
             u: [("b",) if j == perm[f] else ("a", inv[j]) for j in range(4)]}
    apex_a, apex_b = ("a", f), ("b",)
    new = []
    for k in range(4):
        if k == f:
            continue
        x, y = [i for i in range(4) if i not in (f, k)]
        # apex_b sits on the same side of (apex_a, x, y) as k does
        if perm_sign((f, k, x, y)) != 1:
            x, y = y, x
        new.append((apex_a, apex_b, ("a", x), ("a", y)))
    return _retriangulate(T, {t, u}, names, new)


def three_two(T: IdealTriangulation, edge: int) -> IdealTriangulation:
    """Replace the three distinct tetrahedra around a valence three edge
    class by two tetrahedra."""
    cls = T.edge_classes[edge]
    tets = {t for t, _ in cls}
    if len(cls) != 3 or len(tets) != 3:
        raise TriangulationError("3-2 move needs a valence 3 edge in 3 distinct tetrahedra")
    t0, e0 = cls[0]
    a, b = EDGES[e0]
    # walk around the edge, naming the link vertices P0, P1, P2
    names = {}
    c = next(x for x in range(4) if x not in (a, b))
    d = 6 - a - b - c
    cur = (t0, a, b, c, d)
    for step in range(3):
        t, a_, b_, c_, d_ = cur
        names[t] = [None] * 4
        names[t][a_], names[t][b_] = "E1", "E2"
        names[t][c_], names[t][d_] = ("P", step), ("P", (step + 1) % 3)
        u, perm = T.glue(t, c_)
        cur = (u, perm[a_], perm[b_], perm[d_], perm[c_])
    if cur[0] != t0:
        raise TriangulationError("edge walk did not close up")
    vs = names[t0]
    pos = {v: i for i, v in enumerate(vs)}
    new = []
    for top, other in (("E1", "E2"), ("E2", "E1")):
        order = [top, ("P", 2), ("P", 0), ("P", 1)]
        # ("P", 2) lies on the same side of (top, P0, P1) as ``other``
        if perm_sign((pos[top], pos[other], pos[("P", 0)], pos[("P", 1)])) != 1:
            order[2], order[3] = order[3], order[2]
        new.append(tuple(order))
    return _retriangulate(T, tets, names, new)
