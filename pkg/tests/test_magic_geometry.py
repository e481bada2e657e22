import pytest

from surgerylab.magic import is_exceptional_filling, mpq_filling
from surgerylab.slopes import normalize
from surgerylab.triangulation.bundled import load_bundled, magic_available
from surgerylab.triangulation.homology import first_homology
from surgerylab.triangulation.solver import solve_geometric, volume
from surgerylab.triangulation.verify import (FillingSolveError, magic_fillings,
                                             verify_mpq_geometry)

FIG8_VOLUME = 2.029883212819307
MAGIC_VOLUME = 5.333489566898119

pytestmark = pytest.mark.skipif(not magic_available(),
                                reason="magic manifold triangulation not bundled")


@pytest.fixture(scope="module")
def magic():
    return load_bundled("magic")


def test_structure(magic):
    assert magic.num_tetrahedra == 6 and magic.num_cusps == 3
    assert len(magic.edge_classes) == 6
    assert first_homology(magic) == (3, ())


def test_complete_structure(magic):
    s = solve_geometric(magic)
    assert s.is_geometric
    assert volume(s) == pytest.approx(MAGIC_VOLUME, abs=1e-9)


def test_fillings_layout():
    assert magic_fillings(7, 9) == {0: normalize(-4, 3), 1: normalize(-5, 4)}


def test_verify_5_5_geometric(magic):
    r = verify_mpq_geometry(5, 5, magic)
    assert r["status"] == "Geometric", (
        f"N(-3/2,-3/2) on the bundled triangulation: {r['status']}; "
        f"continuation {r.get('continuation')}")
    assert r["volume"] == pytest.approx(FIG8_VOLUME, abs=1e-6)


def test_verify_5_5_hyperbolic_structure_exists(magic):
    # the structure is there, with signed volume equal to the figure-eight
    # constant; only its positivity on this triangulation fails
    r = verify_mpq_geometry(5, 5, magic)
    cont = r["continuation"]
    assert cont["residual"] < 1e-12
    assert cont["signed_volume"] == pytest.approx(FIG8_VOLUME, abs=1e-9)


def test_verify_3_9_non_geometric(magic):
    r = verify_mpq_geometry(3, 9, magic)
    assert r["status"] != "Geometric"
    assert r["expected"]["kind"] == "SFS" and r["agrees"] is True


def test_verify_7_9_geometric(magic):
    r = verify_mpq_geometry(7, 9, magic)
    assert r["status"] == "Geometric" and r["agrees"] is True
    assert r["volume"] < MAGIC_VOLUME


def test_verify_validation(magic):
    with pytest.raises(ValueError):
        verify_mpq_geometry(4, 9, magic)
    with pytest.raises(ValueError):
        verify_mpq_geometry(3, 5, magic)


def test_solver_errors_carry_the_filling():
    # a one-cusp triangulation cannot take a two-cusp filling
    with pytest.raises(FillingSolveError, match=r"N\(-3/2, -4/3\)"):
        verify_mpq_geometry(5, 7, load_bundled("fig8"))


def test_grid_monotone_and_table(magic):
    vols = {}
    for k in range(2, 7):
        for l in range(2, 7):
            r = verify_mpq_geometry(2 * k + 1, 2 * l + 1, magic) if k <= l else None
            s = solve_geometric(magic, {0: normalize(-(k + 1), k), 1: normalize(-(l + 1), l)})
            exceptional = is_exceptional_filling(mpq_filling(2 * min(k, l) + 1,
                                                             2 * max(k, l) + 1))
            assert not exceptional
            if (k, l) == (2, 2):
                continue          # see test_verify_5_5_geometric
            assert s.is_geometric, (k, l)
            vols[k, l] = volume(s)
            assert vols[k, l] < MAGIC_VOLUME
            if r is not None:
                assert r["agrees"] is True
    for (k, l), v in vols.items():
        assert v == pytest.approx(vols.get((l, k), v), abs=1e-9)
        if (k + 1, l) in vols:
            assert vols[k + 1, l] > v


@pytest.mark.parametrize("l", range(2, 11))
def test_minus_two_family_non_geometric(magic, l):
    slopes = (normalize(-2, 1), normalize(-(l + 1), l))
    assert is_exceptional_filling(slopes)
    for fill in ({0: slopes[0], 1: slopes[1]}, {0: slopes[1], 1: slopes[0]}):
        assert not solve_geometric(magic, fill).is_geometric
