import numpy as np
import pytest

from surgerylab.triangulation.bundled import BUNDLED, bundled_text, load_bundled
from surgerylab.triangulation.core import (EdgeCountError, FaceRegluedError,
                                           InvolutionError, OrientationError,
                                           ParseError, UngluedFaceError,
                                           parse_triangulation, serialize)
from surgerylab.triangulation.equations import gluing_system
from surgerylab.triangulation.homology import first_homology
from surgerylab.triangulation.isomorphism import isomorphic
from surgerylab.triangulation.moves import three_two, two_three
from surgerylab.triangulation.solver import solve_geometric, volume

FIG8 = bundled_text("fig8")


def test_figure_eight_structure():
    T = load_bundled("fig8")
    assert T.num_tetrahedra == 2 and T.num_cusps == 1
    assert len(T.edge_classes) == 2
    assert sorted(T.edge_valences()) == [6, 6]


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_roundtrip(name):
    text = bundled_text(name)
    assert serialize(parse_triangulation(text)) == text


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_edge_count_invariant(name):
    T = load_bundled(name)
    assert len(T.edge_classes) == T.num_tetrahedra
    assert sum(T.edge_valences()) == 6 * T.num_tetrahedra


def test_face_reglued():
    text = FIG8.replace("face 1 -> tet 1 face 2 perm 1230",
                        "face 0 -> tet 1 face 0 perm 0132", 1)
    with pytest.raises(FaceRegluedError, match="face reglued"):
        parse_triangulation(text)


def test_unglued_face():
    lines = [l for l in FIG8.splitlines() if l != "face 3 -> tet 1 face 3 perm 2103"]
    with pytest.raises(UngluedFaceError):
        parse_triangulation("\n".join(lines) + "\n")


def test_inconsistent_involution():
    text = FIG8.replace("face 2 -> tet 0 face 1 perm 3012",
                        "face 2 -> tet 0 face 2 perm 3102")
    with pytest.raises((InvolutionError, ParseError, OrientationError)):
        parse_triangulation(text)


def test_orientation_reversing_gluing():
    one = ("tets 1 cusps 1\ntet 0\n"
           "face 0 -> tet 0 face 1 perm 1023\n"
           "face 1 -> tet 0 face 0 perm 1023\n"
           "face 2 -> tet 0 face 3 perm 0132\n"
           "face 3 -> tet 0 face 2 perm 0132\n"
           "cusp 0 tet 0 vertex 0\n")
    with pytest.raises((OrientationError, EdgeCountError)):
        parse_triangulation(one)


@pytest.mark.parametrize("bad", ["", "tets x cusps 1\n", "hello\n"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_triangulation(bad)


def test_basis_determinant_checked():
    with pytest.raises(ParseError):
        parse_triangulation(FIG8.replace("basis 1 0 1 1", "basis 1 0 1 2"))


def test_homology():
    assert first_homology(load_bundled("fig8")) == (1, ())
    assert first_homology(load_bundled("sister")) == (1, (5,))
    assert first_homology(load_bundled("magic")) == (3, ())


def test_row_counts():
    assert len(gluing_system(load_bundled("fig8"), {})) == 2 + 2
    M = load_bundled("magic")
    assert len(gluing_system(M, {})) == 6 + 6
    assert len(gluing_system(M, {0: "-3/2", 1: "-3/2"})) == 6 + 2 + 1 + 1
    with pytest.raises(ValueError):
        gluing_system(M, [])


@pytest.mark.parametrize("name", sorted(BUNDLED))
def test_every_corner_in_one_edge_row(name):
    T = load_bundled(name)
    system = gluing_system(T, {})
    edge = [e for e in system.equations if e.kind == "edge"]
    assert len(edge) == T.num_tetrahedra
    assert all(e.rhs == 2 for e in edge)
    # each corner parameter sits on two opposite edges of its tetrahedron
    total = sum(e.counts for e in edge)
    assert np.array_equal(total, np.full((T.num_tetrahedra, 3), 2))


def test_rank_of_complete_system():
    A, B, c = gluing_system(load_bundled("fig8"), {}).matrices()
    # one edge equation is redundant
    assert np.linalg.matrix_rank(np.hstack([A, B])) == 3


def test_two_three_then_three_two():
    T = load_bundled("fig8")
    U = two_three(T, 0, 0)
    assert U.num_tetrahedra == 3 and len(U.edge_classes) == 3
    s = solve_geometric(U)
    assert s.is_geometric
    assert volume(s) == pytest.approx(2.029883212819307, abs=1e-9)
    edge = next(i for i, v in enumerate(U.edge_valences()) if v == 3)
    V = three_two(U, edge)
    assert isomorphic(V, T)[0]
