"""
Ideal triangulations of orientable cusped 3-manifolds.

A triangulation is a list of tetrahedra with vertices labelled 0..3.  Face
``f`` of a tetrahedron is the face opposite vertex ``f``.  A gluing of face
``f`` of tetrahedron ``t`` is a pair ``(u, perm)`` where ``perm`` is a
permutation of {0,1,2,3} sending the vertices of ``t`` to those of ``u`` and
with ``perm[f]`` the face of ``u`` being glued to.

Text format (line oriented, ``#`` starts a comment)::

    tets N cusps C
    tet 0
    face 0 -> tet 1 face 1 perm 1032
    ...                                  (4 face lines per tetrahedron)
    cusp 0 tet 0 vertex 0 [basis a b c d]

The optional ``basis`` suffix is an integer change of peripheral basis
relative to the traced one, see :mod:`surgerylab.triangulation.cusps`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations

EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
EDGE_INDEX = {frozenset(e): i for i, e in enumerate(EDGES)}
# 0: z on edges 01 and 23, 1: z' = 1/(1-z) on 02 and 13, 2: z'' = 1-1/z on 03 and 12
EDGE_SHAPE_TYPE = (0, 1, 2, 2, 1, 0)


class TriangulationError(ValueError):
    pass


class ParseError(TriangulationError):
    pass


class UngluedFaceError(TriangulationError):
    pass


class FaceRegluedError(TriangulationError):
    pass


class InvolutionError(TriangulationError):
    pass


class OrientationError(TriangulationError):
    pass


class EdgeCountError(TriangulationError):
    pass


class CuspError(TriangulationError):
    pass


def perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def perm_inverse(perm) -> tuple:
    inv = [0] * len(perm)
    for i, j in enumerate(perm):
        inv[j] = i
    return tuple(inv)


def perm_compose(p, q) -> tuple:
    """Return ``p o q`` (apply ``q`` first)."""
    return tuple(p[q[i]] for i in range(len(q)))


EVEN_PERMS = tuple(p for p in permutations(range(4)) if perm_sign(p) == 1)


def vertex_order_ccw(v: int, a: int, b: int, c: int) -> bool:
    """True if ``(a, b, c)`` is counterclockwise seen from the cusp at ``v``."""
    return perm_sign((v, a, b, c)) == 1


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx

    def classes(self):
        groups = {}
        for x in sorted(self.parent):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values())


@dataclass(frozen=True)
class IdealTriangulation:
    """Validated ideal triangulation.

    ``gluings[t][f] = (u, perm)``.  ``cusp_reps[c] = (t, v)`` fixes the
    ordering of cusps; ``cusp_bases[c]`` is an optional 2x2 integer matrix
    ``((a, b), (c, d))`` giving meridian ``a*m0 + b*l0`` and longitude
    ``c*m0 + d*l0`` in terms of the traced curves.
    """

    gluings: tuple
    cusp_reps: tuple
    cusp_bases: tuple = None
    edge_classes: tuple = field(init=False, compare=False, repr=False)
    edge_of: tuple = field(init=False, compare=False, repr=False)
    cusp_of: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        gl = tuple(tuple((int(u), tuple(int(x) for x in p)) for u, p in row)
                   for row in self.gluings)
        object.__setattr__(self, "gluings", gl)
        object.__setattr__(self, "cusp_reps",
                           tuple((int(t), int(v)) for t, v in self.cusp_reps))
        if self.cusp_bases is None:
            object.__setattr__(self, "cusp_bases",
                               tuple(None for _ in self.cusp_reps))
        else:
            object.__setattr__(self, "cusp_bases", tuple(
                None if b is None else tuple(tuple(int(x) for x in r) for r in b)
                for b in self.cusp_bases))
        self._validate_gluings()
        self._derive()

    @property
    def num_tetrahedra(self) -> int:
        return len(self.gluings)

    @property
    def num_cusps(self) -> int:
        return len(self.cusp_reps)

    def _validate_gluings(self):
        n = len(self.gluings)
        if n == 0:
            raise TriangulationError("empty triangulation")
        for t, row in enumerate(self.gluings):
            if len(row) != 4:
                raise UngluedFaceError(f"tet {t} has {len(row)} face gluings")
            for f, (u, perm) in enumerate(row):
                if not 0 <= u < n:
                    raise TriangulationError(f"tet {t} face {f}: no tet {u}")
                if sorted(perm) != [0, 1, 2, 3]:
                    raise TriangulationError(f"tet {t} face {f}: bad perm {perm}")
                g = perm[f]
                if u == t and g == f:
                    raise InvolutionError(f"tet {t} face {f} glued to itself")
                back_u, back_perm = self.gluings[u][g]
                if back_u != t or back_perm != perm_inverse(perm):
                    raise InvolutionError(
                        f"tet {t} face {f} -> tet {u} face {g} is not returned "
                        f"by the inverse gluing")
                if perm_sign(perm) != -1:
                    raise OrientationError(
                        f"tet {t} face {f}: gluing perm {perm} is even, so the "
                        f"gluing does not respect the orientations")

    def _derive(self):
        n = self.num_tetrahedra
        uf = _UnionFind()
        for t in range(n):
            for e in range(6):
                uf.add((t, e))
        for t in range(n):
            for f in range(4):
                u, perm = self.gluings[t][f]
                for a, b in EDGES:
                    if f in (a, b):
                        continue
                    uf.union((t, EDGE_INDEX[frozenset((a, b))]),
                             (u, EDGE_INDEX[frozenset((perm[a], perm[b]))]))
        classes = uf.classes()
        edge_of = [[0] * 6 for _ in range(n)]
        for i, cls in enumerate(classes):
            for t, e in cls:
                edge_of[t][e] = i
        if len(classes) != n:
            raise EdgeCountError(
                f"{len(classes)} edge classes for {n} tetrahedra")
        object.__setattr__(self, "edge_classes", tuple(tuple(c) for c in classes))
        object.__setattr__(self, "edge_of", tuple(tuple(r) for r in edge_of))

        vf = _UnionFind()
        for t in range(n):
            for v in range(4):
                vf.add((t, v))
        for t in range(n):
            for f in range(4):
                u, perm = self.gluings[t][f]
                for v in range(4):
                    if v != f:
                        vf.union((t, v), (u, perm[v]))
        vclasses = vf.classes()
        if len(vclasses) != len(self.cusp_reps):
            raise CuspError(f"file declares {len(self.cusp_reps)} cusps, "
                            f"found {len(vclasses)}")
        cusp_of = [[None] * 4 for _ in range(n)]
        for c, (t, v) in enumerate(self.cusp_reps):
            root = vf.find((t, v))
            for cls in vclasses:
                if vf.find(cls[0]) == root:
                    for tt, vv in cls:
                        if cusp_of[tt][vv] is not None:
                            raise CuspError(f"cusp representatives {c} repeat")
                        cusp_of[tt][vv] = c
        if len(self.cusp_bases) != len(self.cusp_reps):
            raise CuspError("one basis entry per cusp required")
        for c in range(len(self.cusp_reps)):
            chi = self._cusp_euler_characteristic(c, cusp_of)
            if chi != 0:
                raise CuspError(f"cusp {c} has Euler characteristic {chi}")
        object.__setattr__(self, "cusp_of", tuple(tuple(r) for r in cusp_of))

    def _cusp_euler_characteristic(self, c, cusp_of):
        triangles = [(t, v) for t in range(self.num_tetrahedra)
                     for v in range(4) if cusp_of[t][v] == c]
        faces = len(triangles)
        return len(self._corner_classes(triangles)) - 3 * faces // 2 + faces

    def _corner_classes(self, triangles):
        uf = _UnionFind()
        tri_set = set(triangles)
        for t, v in triangles:
            for k in range(4):
                if k != v:
                    uf.add((t, v, k))
        for t, v in triangles:
            for f in range(4):
                if f == v:
                    continue
                u, perm = self.gluings[t][f]
                assert (u, perm[v]) in tri_set
                for k in range(4):
                    if k not in (v, f):
                        uf.union((t, v, k), (u, perm[v], perm[k]))
        return uf.classes()

    # -- helpers used by the rest of the subpackage --------------------

    def glue(self, t: int, f: int):
        return self.gluings[t][f]

    def cusp_triangles(self, c: int):
        return [(t, v) for t in range(self.num_tetrahedra) for v in range(4)
                if self.cusp_of[t][v] == c]

    def edge_valences(self):
        return [len(cls) for cls in self.edge_classes]

    def with_bases(self, bases) -> "IdealTriangulation":
        return IdealTriangulation(self.gluings, self.cusp_reps, bases)


def _fmt_perm(perm) -> str:
    return "".join(str(x) for x in perm)


def serialize(T: IdealTriangulation) -> str:
    lines = [f"tets {T.num_tetrahedra} cusps {T.num_cusps}"]
    for t, row in enumerate(T.gluings):
        lines.append(f"tet {t}")
        for f, (u, perm) in enumerate(row):
            lines.append(f"face {f} -> tet {u} face {perm[f]} perm {_fmt_perm(perm)}")
    for c, (t, v) in enumerate(T.cusp_reps):
        line = f"cusp {c} tet {t} vertex {v}"
        basis = T.cusp_bases[c]
        if basis is not None:
            line += " basis " + " ".join(str(x) for r in basis for x in r)
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_triangulation(text: str) -> IdealTriangulation:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 4 or rows[0][0] != "tets" or rows[0][2] != "cusps":
        raise ParseError("expected header 'tets N cusps C'")
    try:
        n, ncusps = int(rows[0][1]), int(rows[0][3])
    except ValueError:
        raise ParseError("non-integer header counts") from None
    gluings: list = [[None] * 4 for _ in range(n)]
    cusp_reps: list = [None] * ncusps
    bases: list = [None] * ncusps
    current = None
    for tok in rows[1:]:
        try:
            if tok[0] == "tet" and len(tok) == 2:
                current = int(tok[1])
                if not 0 <= current < n:
                    raise ParseError(f"tet index {current} out of range")
            elif tok[0] == "face":
                if current is None or len(tok) != 9 or tok[2] != "->" \
                        or tok[3] != "tet" or tok[5] != "face" or tok[7] != "perm":
                    raise ParseError("malformed face line: " + " ".join(tok))
                f, u, g = int(tok[1]), int(tok[4]), int(tok[6])
                perm = tuple(int(ch) for ch in tok[8])
                if len(perm) != 4 or sorted(perm) != [0, 1, 2, 3]:
                    raise ParseError(f"bad permutation {tok[8]}")
                if perm[f] != g:
                    raise ParseError(f"perm {tok[8]} does not send face {f} to face {g}")
                if gluings[current][f] is not None:
                    raise FaceRegluedError(f"face reglued: tet {current} face {f}")
                gluings[current][f] = (u, perm)
            elif tok[0] == "cusp":
                if len(tok) not in (6, 11) or tok[2] != "tet" or tok[4] != "vertex":
                    raise ParseError("malformed cusp line: " + " ".join(tok))
                c = int(tok[1])
                if not 0 <= c < ncusps:
                    raise ParseError(f"cusp index {c} out of range")
                cusp_reps[c] = (int(tok[3]), int(tok[5]))
                if len(tok) == 11:
                    if tok[6] != "basis":
                        raise ParseError("expected 'basis'")
                    a, b, cc, d = (int(x) for x in tok[7:11])
                    if a * d - b * cc != 1:
                        raise ParseError(f"cusp {c} basis change has determinant != 1")
                    bases[c] = ((a, b), (cc, d))
            else:
                raise ParseError("unrecognised line: " + " ".join(tok))
        except TriangulationError:
            raise
        except (ValueError, IndexError):
            raise ParseError("malformed line: " + " ".join(tok)) from None
    for t in range(n):
        for f in range(4):
            if gluings[t][f] is None:
                raise UngluedFaceError(f"unglued face: tet {t} face {f}")
    if any(r is None for r in cusp_reps):
        raise ParseError("missing cusp representative")
    return IdealTriangulation(tuple(tuple(r) for r in gluings), tuple(cusp_reps),
                              tuple(bases))


def from_gluings(gluings, cusp_bases=None) -> IdealTriangulation:
    """Build a triangulation, choosing cusp representatives automatically."""
    n = len(gluings)
    uf = _UnionFind()
    for t in range(n):
        for v in range(4):
            uf.add((t, v))
    for t in range(n):
        for f in range(4):
            u, perm = gluings[t][f]
            for v in range(4):
                if v != f:
                    uf.union((t, v), (u, perm[v]))
    reps = [cls[0] for cls in uf.classes()]
    return IdealTriangulation(tuple(tuple(r) for r in gluings), tuple(reps),
                              cusp_bases)


def relabel(T: IdealTriangulation, tet_map, vertex_perms) -> IdealTriangulation:
    """Apply tetrahedron bijection ``tet_map`` and per-tet vertex relabelling.

    Vertex ``i`` of old tet ``t`` becomes vertex ``vertex_perms[t][i]`` of new
    tet ``tet_map[t]``.
    """
    n = T.num_tetrahedra
    new = [[None] * 4 for _ in range(n)]
    for t in range(n):
        s = vertex_perms[t]
        for f in range(4):
            u, perm = T.gluings[t][f]
            su = vertex_perms[u]
            new_perm = perm_compose(su, perm_compose(perm, perm_inverse(s)))
            new[tet_map[t]][s[f]] = (tet_map[u], new_perm)
    reps = [(tet_map[t], vertex_perms[t][v]) for t, v in T.cusp_reps]
    return IdealTriangulation(tuple(tuple(r) for r in new), tuple(reps), None)
