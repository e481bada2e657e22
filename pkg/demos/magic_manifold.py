"""
Hyperbolic structures on Dehn fillings of the magic manifold N.

Solves the complete structure, the M_{p,q} = N(-(k+1)/k, -(l+1)/l) grid,
the exceptional family N(-2, -(l+1)/l), and shows what happens at
N(-3/2, -3/2) on the bundled triangulation.

Run with ``python demos/magic_manifold.py``.
"""
import numpy as np

from surgerylab.slopes import normalize
from surgerylab.triangulation.bundled import load_bundled
from surgerylab.triangulation.homology import first_homology
from surgerylab.triangulation.solver import (signed_volume, solve_by_continuation,
                                             solve_geometric, volume)
from surgerylab.triangulation.verify import verify_mpq_geometry


def main():
    M = load_bundled("magic")
    complete = solve_geometric(M)
    print(f"N: {M.num_tetrahedra} tetrahedra, {M.num_cusps} cusps, "
          f"H_1 rank {first_homology(M)[0]}, volume {volume(complete):.10f}")

    print("\nvol N(-(k+1)/k, -(l+1)/l):")
    print("  k\\l " + "".join(f"{l:>10d}" for l in range(2, 7)))
    for k in range(2, 7):
        row = []
        for l in range(2, 7):
            s = solve_geometric(M, {0: normalize(-(k + 1), k), 1: normalize(-(l + 1), l)})
            row.append(f"{volume(s):10.6f}" if s.is_geometric else f"{s.status.value[:10]:>10}")
        print(f"  {k:3d} " + "".join(row))

    print("\nN(-2, -(l+1)/l) is exceptional; the solver agrees:")
    for l in range(2, 6):
        s = solve_geometric(M, {0: normalize(-2, 1), 1: normalize(-(l + 1), l)})
        print(f"  l = {l}: {s.status.value} ({s.diagnostic})")

    print("\nM_{7,9}:", verify_mpq_geometry(7, 9, M)["volume"])

    print("\nN(-3/2, -3/2), the figure-8 knot sister:")
    r = verify_mpq_geometry(5, 5, M)
    print(f"  positive solver: {r['status']}")
    s = solve_by_continuation(M, {0: "-3/2", 1: "-3/2"})
    neg = int(np.sum(s.shapes.imag < 0))
    print(f"  continuation from the complete structure: residual {s.residual:.1e}, "
          f"signed volume {signed_volume(s.shapes):.12f}, {neg} negative tetrahedron")
    sister = volume(solve_geometric(load_bundled("sister")))
    print(f"  sister triangulation volume: {sister:.12f}")


if __name__ == "__main__":
    main()
