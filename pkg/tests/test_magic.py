import json

import pytest
from hypothesis import given, strategies as st

from surgerylab.magic import (MagicFilling, classify_mpq, is_exceptional_filling,
                              mpq_filling, mpq_report)
from surgerylab.slopes import Slope


def test_exceptional_examples():
    assert is_exceptional_filling(("-2", "-4/3"))
    assert not is_exceptional_filling(("-3/2", "-3/2"))
    assert is_exceptional_filling(("-4", "-1/2"))
    assert is_exceptional_filling(("-1/2", "-4"))
    assert is_exceptional_filling(("1", "1"))
    assert is_exceptional_filling(("-5/2", "-3/2"))
    assert not is_exceptional_filling(("-3/2", "-1/2"))
    assert is_exceptional_filling(("inf", "7"))


def test_exceptional_refuses_other_sizes():
    with pytest.raises(ValueError):
        is_exceptional_filling(("-3/2",))
    with pytest.raises(ValueError):
        is_exceptional_filling(("-3/2", "-3/2", "-3/2"))
    with pytest.raises(ValueError):
        MagicFilling(("1", "2", "3", "4"))


def test_filling_is_a_multiset():
    assert MagicFilling(("-4/3", "-2")) == MagicFilling(("-2", "-4/3"))


@pytest.mark.parametrize("p,q,slopes", [(5, 5, ("-3/2", "-3/2")),
                                        (3, 7, ("-2", "-4/3")),
                                        (7, 9, ("-4/3", "-5/4"))])
def test_mpq_filling_examples(p, q, slopes):
    assert mpq_filling(p, q) == MagicFilling(slopes)


def test_classify_examples():
    a = classify_mpq(3, 9)
    assert a.kind == "SFS" and a.fibers == ((3, 1), (3, 4))
    assert a.seifert_data() == {"base": "D", "fibers": [[3, 1], [3, 4]]}
    b = classify_mpq(5, 5)
    assert b.kind == "Hyperbolic" and b.name == "figure-8 knot sister"
    assert classify_mpq(7, 7).kind == "Hyperbolic"
    with pytest.raises(ValueError):
        classify_mpq(3, 5)
    with pytest.raises(ValueError):
        classify_mpq(7, 5)


def test_report_json():
    r = mpq_report(5, 5)
    assert r["filling"] == ["-3/2", "-3/2"] and r["exceptional"] is False
    json.dumps(r)


def test_hyperbolic_iff_not_exceptional():
    for p in range(3, 100, 2):
        for q in range(p, 100, 2):
            if (p, q) in ((3, 3), (3, 5)):
                continue
            hyp = classify_mpq(p, q).kind == "Hyperbolic"
            assert hyp == (not is_exceptional_filling(mpq_filling(p, q)))


k_values = st.integers(1, 10**6)


@given(k_values, k_values)
def test_filling_slopes_range(k, l):
    f = mpq_filling(2 * k + 1, 2 * max(k, l) + 1)
    for s in f.slopes:
        assert -2 <= s.as_fraction() < -1


@given(st.integers(1, 10**6))
def test_filling_slopes_increase(k):
    a = mpq_filling(2 * k + 1, 2 * k + 1).slopes[0]
    b = mpq_filling(2 * k + 3, 2 * k + 3).slopes[0]
    assert a.as_fraction() < b.as_fraction()
    assert a == Slope(-(k + 1), k)
