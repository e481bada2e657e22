import json

import pytest
from hypothesis import given, strategies as st

from surgerylab.knots import (KLEIN_BOTTLE_PIECE, PretzelKnot, TorusKnot, Verdict,
                              classify_surgery, is_hyperbolic_pretzel,
                              kp_diagram_stats, surface_slope)
from surgerylab.slopes import Slope

odd = st.integers(2, 60).map(lambda n: 2 * n + 1)


def test_hyperbolicity_examples():
    assert not is_hyperbolic_pretzel(3, 3)
    assert not is_hyperbolic_pretzel(3, 5)
    assert not is_hyperbolic_pretzel(5, 3)
    assert is_hyperbolic_pretzel(5, 5)


@pytest.mark.parametrize("p,q,r", [(5, 5, 20), (3, 7, 20), (3, 3, 12)])
def test_surface_slope_examples(p, q, r):
    assert surface_slope(p, q) == r


@pytest.mark.parametrize("p,sign,w", [(5, "+", 19), (5, "-", 17), (7, "+", 31)])
def test_diagram_stats_examples(p, sign, w):
    d = kp_diagram_stats(p, sign)
    assert d.writhe == w and d.seifert_circles == 4 and d.braid_index_upper == 4


def test_input_validation():
    with pytest.raises(ValueError, match="p must be odd"):
        PretzelKnot(4, 5)
    with pytest.raises(TypeError):
        PretzelKnot(5.0, 5)
    with pytest.raises(ValueError):
        kp_diagram_stats(3, "+")
    with pytest.raises(ValueError):
        kp_diagram_stats(5, "x")
    with pytest.raises(ValueError):
        TorusKnot(2, 4)


def test_pretzel_order_is_normalized():
    k = PretzelKnot(9, 5)
    assert (k.p, k.q) == (5, 9) and str(k) == "P(-2,5,9)"


def test_classify_5_5_toroidal():
    c = classify_surgery(5, 5, 20)
    assert c.verdict is Verdict.TOROIDAL
    kinds = [piece["kind"] for piece in c.pieces]
    assert kinds[0] == KLEIN_BOTTLE_PIECE
    assert c.pieces[1]["filling"] == ["-3/2", "-3/2"]
    assert c.pieces[1]["classification"]["name"] == "figure-8 knot sister"


def test_classify_5_5_hyperbolic():
    assert classify_surgery(5, 5, 19).verdict is Verdict.HYPERBOLIC
    assert classify_surgery(5, 5, "41/2").verdict is Verdict.HYPERBOLIC


def test_classify_3_7_sfs_piece():
    c = classify_surgery(3, 7, 20)
    assert c.verdict is Verdict.TOROIDAL
    assert c.seifert_data == {"base": "D", "fibers": [[3, 1], [2, 3]]}


def test_classify_out_of_scope_and_torus_knots():
    assert classify_surgery(5, 7, 3).verdict is Verdict.OUT_OF_SCOPE
    assert classify_surgery(5, 7, 24).verdict is Verdict.TOROIDAL
    with pytest.raises(ValueError, match="not hyperbolic"):
        classify_surgery(3, 5, 16)


def test_classification_json_shape():
    out = classify_surgery(7, 7, 28).to_json()
    assert set(out) == {"verdict", "pieces", "seifert_data", "reason"}
    json.dumps(out)


@given(odd, st.integers(-300, 300))
def test_p_equals_q_never_reducible_or_sfs(p, r):
    v = classify_surgery(p, p, r).verdict
    assert v in (Verdict.HYPERBOLIC, Verdict.TOROIDAL)
    assert (v is Verdict.TOROIDAL) == (r == surface_slope(p, p))


@given(odd, odd)
def test_toroidal_slope_is_surface_slope(p, q):
    c = classify_surgery(p, q, surface_slope(p, q))
    assert c.verdict is Verdict.TOROIDAL
    assert c.slope == Slope(2 * (p + q), 1)


@given(odd, st.sampled_from("+-"))
def test_writhe_is_odd(p, sign):
    assert kp_diagram_stats(p, sign).writhe % 2 == 1
