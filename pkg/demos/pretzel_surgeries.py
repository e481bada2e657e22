"""
Walk through the exceptional surgery classification for P(-2, p, p).

1. The only exceptional slope is the toroidal surface slope 2(p+q) = 4p.
2. An atoroidal Seifert fibred surgery would descend to a lens space
   surgery on T(2, p), which forces r = 4p +- 1.
3. For those two slopes the knots K_{p+-} are shown to be neither
   Montesinos nor torus knots by signature and Rasmussen bounds.

Run with ``python demos/pretzel_surgeries.py``.
"""
from surgerylab.invariants import kp_invariants, torus_elimination_report
from surgerylab.knots import classify_surgery
from surgerylab.moser import classify_torus_surgery, lens_slopes_for_factor_knot
from surgerylab.slopes import factor_knot_slope


def toroidal_slopes():
    print("Exceptional integer slopes in [-100, 100]:")
    for p in (5, 7, 9):
        exceptional = [r for r in range(-100, 101)
                       if classify_surgery(p, p, r).verdict.value != "Hyperbolic"]
        c = classify_surgery(p, p, exceptional[0])
        filling = c.pieces[1]["filling"]
        print(f"  P(-2,{p},{p}): {exceptional}  -> Klein bottle piece + N({', '.join(filling)})")
    c = classify_surgery(3, 9, 24)
    print(f"  P(-2,3,9)(24): Seifert piece {c.seifert_data}")


def lens_descent():
    p = 5
    print(f"\nQuotient surgeries r/2 on T(2,{p}) near r = 4p:")
    for r in range(4 * p - 3, 4 * p + 4):
        v = classify_torus_surgery(2, p, factor_knot_slope(r))
        note = "" if r % 2 else "  (not a quotient: r even)"
        print(f"  r = {r:3d}  slope {str(factor_knot_slope(r)):>5}  {v.to_json()}{note}")
    print(f"  lens slopes: {lens_slopes_for_factor_knot(p, 100)}")


def obstructions():
    print("\nObstructions for K_{p+-}:")
    print("   p s   sigma  s_lower  s_upper  det  2g(T(4,det))  Montesinos?  torus?")
    for p in (5, 7, 9, 51, 199):
        for s in "+-":
            r = kp_invariants(p, s)
            t = torus_elimination_report(p, s)
            print(f"  {p:3d} {s} {r['sigma']:6d} {r['s_lower']:8d} {r['s_upper']:8d} "
                  f"{r['det']:4d} {t['torus_s']:13d}  {str(not r['montesinos_excluded']):>11}"
                  f"  {str(not r['torus_excluded']):>6}")


if __name__ == "__main__":
    toroidal_slopes()
    lens_descent()
    obstructions()
