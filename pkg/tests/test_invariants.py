import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from oracles import signature_numpy, torus_determinant_sympy
from surgerylab.invariants import (GoeritzForm, RasmussenBounds, goeritz_form_kp,
                                   homology_order_of_surgery, knot_signature_kp,
                                   matrix_signature, montesinos_obstruction,
                                   montesinos_witness, rasmussen_bounds_kp,
                                   torus_determinant, torus_elimination,
                                   torus_elimination_report, torus_two_genus)

sign = st.sampled_from("+-")
odd_p = st.integers(2, 99).map(lambda n: 2 * n + 1)


@pytest.mark.parametrize("p,s,top,e", [(5, "+", 17, -26), (5, "-", 15, -22),
                                       (7, "+", 25, -42)])
def test_goeritz_examples(p, s, top, e):
    g = goeritz_form_kp(p, s)
    assert g.matrix == ((top, 0, 2), (0, 1, 1), (2, 1, 0))
    assert g.euler_number == e


def test_goeritz_validation():
    with pytest.raises(ValueError):
        GoeritzForm(((1, 2), (3, 4)), 0)
    with pytest.raises(ValueError):
        GoeritzForm(((1,),), 1)
    with pytest.raises(ValueError):
        RasmussenBounds(3, 2)


def test_signature_examples():
    assert matrix_signature([[17, 0, 2], [0, 1, 1], [2, 1, 0]]) == 1
    assert matrix_signature(np.eye(3, dtype=int).tolist()) == 3
    assert matrix_signature([[1, 0], [0, -1]]) == 0


def test_signature_zero_diagonal():
    assert matrix_signature([[0, 1], [1, 0]]) == 0
    assert matrix_signature([[0, 0], [0, 0]]) == 0
    assert matrix_signature([[0, 2, 0], [2, 0, 0], [0, 0, -5]]) == -1
    with pytest.raises(ValueError):
        matrix_signature([[0, 1], [2, 0]])


@pytest.mark.parametrize("p,s,sigma", [(5, "+", -12), (5, "-", -10), (9, "+", -28)])
def test_knot_signature_examples(p, s, sigma):
    assert knot_signature_kp(p, s) == sigma


@pytest.mark.parametrize("p,s,lo,hi", [(5, "+", 16, 22), (5, "-", 14, 20),
                                       (7, "+", 28, 34)])
def test_rasmussen_examples(p, s, lo, hi):
    assert rasmussen_bounds_kp(p, s) == RasmussenBounds(lo, hi)


@pytest.mark.parametrize("p,w", [(5, 4), (7, 8), (99, 192)])
def test_montesinos_examples(p, w):
    for s in "+-":
        assert montesinos_witness(p, s) == w
        assert montesinos_obstruction(p, s)


def test_torus_examples():
    assert torus_determinant(4, 21) == 21
    assert torus_determinant(3, 5) == 1
    assert torus_determinant(2, 7) == torus_determinant_sympy(2, 7) == 7
    assert torus_two_genus(4, 21) == 60
    assert torus_two_genus(2, 3) == 2
    assert torus_two_genus(3, 4) == 6
    with pytest.raises(ValueError):
        torus_determinant(4, 6)


@pytest.mark.parametrize("p,s,det,two_g,upper", [(5, "+", 21, 60, 22),
                                                 (5, "-", 19, 54, 20),
                                                 (7, "+", 29, 84, 34)])
def test_torus_elimination_examples(p, s, det, two_g, upper):
    r = torus_elimination_report(p, s)
    assert r["det"] == det and r["forced_torus_knot"] == [4, det]
    assert r["s_upper"] == upper and r["torus_s"] == two_g
    assert torus_elimination(p, s)


def test_homology_order():
    assert homology_order_of_surgery(21) == 21
    assert homology_order_of_surgery(-19) == 19
    assert homology_order_of_surgery(0) == "infinite"


def test_closed_forms_full_range():
    for p in range(5, 200, 2):
        for s, e in (("+", 1), ("-", -1)):
            g = goeritz_form_kp(p, s)
            assert matrix_signature(g.matrix) == 1
            assert knot_signature_kp(p, s) == -4 * p + 9 - e
            b = rasmussen_bounds_kp(p, s)
            assert (b.lower, b.upper) == (6 * p - 15 + e, 6 * p - 9 + e)
            assert b.upper - b.lower == 6
            assert montesinos_witness(p, s) == 2 * p - 6
            assert montesinos_obstruction(p, s) and torus_elimination(p, s)


@given(odd_p, sign)
def test_signature_agrees_with_eigenvalues(p, s):
    m = goeritz_form_kp(p, s).matrix
    assert matrix_signature(m) == signature_numpy(m)


def _unimodular(draw):
    n = 3
    S = np.eye(n, dtype=object)
    for _ in range(draw(st.integers(1, 8))):
        i, j = draw(st.sampled_from([(a, b) for a in range(n) for b in range(n) if a != b]))
        k = draw(st.integers(-3, 3))
        E = np.eye(n, dtype=object)
        E[i, j] = k
        S = S.dot(E)
    if draw(st.booleans()):
        S[:, 0] = -S[:, 0]
    return S


@st.composite
def congruent_pair(draw):
    vals = st.integers(-20, 20)
    a = [[draw(vals) for _ in range(3)] for _ in range(3)]
    M = np.array([[a[i][j] if i <= j else a[j][i] for j in range(3)] for i in range(3)],
                 dtype=object)
    S = _unimodular(draw)
    return M, S.T.dot(M).dot(S)


@settings(max_examples=200)
@given(congruent_pair())
def test_signature_congruence_invariant(pair):
    M, N = pair
    assert matrix_signature(M.tolist()) == matrix_signature(N.tolist())
    assert matrix_signature(M.tolist()) == signature_numpy(M.astype(float))


coprime = st.tuples(st.integers(2, 40), st.integers(2, 40)).filter(
    lambda xy: np.gcd(*xy) == 1)


@given(coprime)
def test_torus_determinant_symmetric_and_oracle(xy):
    x, y = xy
    assert torus_determinant(x, y) == torus_determinant(y, x)
    assert torus_determinant(x, y) == torus_determinant(x, -y)


@settings(max_examples=30, deadline=None)
@given(coprime)
def test_torus_determinant_sympy_oracle(xy):
    assert torus_determinant(*xy) == torus_determinant_sympy(*xy)


@given(st.integers(1, 200))
def test_torus_2_y(n):
    y = 2 * n + 1
    assert torus_determinant(2, y) == y


def test_braid_index_three_determinants():
    assert {torus_determinant(3, x) for x in range(2, 200) if x % 3} == {1, 3}
