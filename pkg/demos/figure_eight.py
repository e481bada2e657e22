"""
The figure-eight knot complement from two regular ideal tetrahedra.

Solves the gluing equations, compares the volume with 6 Lambda(pi/3), and
traces a few Dehn fillings whose volumes climb back toward the cusped one.

Run with ``python demos/figure_eight.py``.
"""
import math

from surgerylab.triangulation.bundled import load_bundled
from surgerylab.triangulation.isomorphism import isomorphic
from surgerylab.triangulation.solver import solve_geometric, volume
from surgerylab.triangulation.volume import lobachevsky


def main():
    T = load_bundled("fig8")
    s = solve_geometric(T)
    print(f"shapes {s.shapes}, {s.iterations} Newton steps")
    print(f"volume {volume(s):.15f}")
    print(f"6 Lambda(pi/3) = {6 * lobachevsky(math.pi / 3):.15f}")

    print("\nFillings:")
    for slope in ("5", "6", "10", "20", "1/5", "-7/3"):
        f = solve_geometric(T, {0: slope})
        v = f"{volume(f):.10f}" if f.is_geometric else f.status.value
        print(f"  {slope:>5}: {v}")

    sister = load_bundled("sister")
    print(f"\nsister volume {volume(solve_geometric(sister)):.15f}, "
          f"isomorphic to the knot complement: {isomorphic(T, sister)[0]}")


if __name__ == "__main__":
    main()
