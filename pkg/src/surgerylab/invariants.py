"""
Exact knot invariants for K_{p+-}: Gordon-Litherland signature, Rasmussen
bounds from the slice-Bennequin inequality, and the determinant and genus
of torus knots used to rule K_{p+-} out as a torus knot.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .knots import _check_odd, kp_diagram_stats, sign_value


@dataclass(frozen=True)
class GoeritzForm:
    matrix: tuple
    euler_number: int

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        _check_symmetric(m)
        if self.euler_number % 2:
            raise ValueError("normal Euler number must be even")
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class RasmussenBounds:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")


def _check_symmetric(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    for i in range(n):
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ValueError("matrix must be symmetric")


def goeritz_form_kp(p: int, sign) -> GoeritzForm:
    """Gordon-Litherland form of the spanning surface V_{p+-}."""
    _check_odd("p", p, 5)
    e = sign_value(sign)
    return GoeritzForm(((4 * p - 4 + e, 0, 2), (0, 1, 1), (2, 1, 0)),
                       euler_number=-8 * p + 16 - 2 * e)


def matrix_signature(M) -> int:
    """Signature of a symmetric integer (or rational) matrix.

    Symmetric Gaussian elimination over the rationals.  When every remaining
    diagonal entry is zero but some ``a_ij`` is not, adding row/column ``j``
    to row/column ``i`` makes the pivot ``2 a_ij`` nonzero.
    """
    rows = [list(r) for r in M]
    _check_symmetric(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    sig = 0
    while a:
        n = len(a)
        piv = next((i for i in range(n) if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in range(n) for j in range(n) if a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        a[0], a[piv] = a[piv], a[0]
        for r in a:
            r[0], r[piv] = r[piv], r[0]
        d = a[0][0]
        sig += 1 if d > 0 else -1
        a = [[a[i][j] - a[i][0] * a[0][j] / d for j in range(1, n)]
             for i in range(1, n)]
    return sig


def knot_signature_kp(p: int, sign) -> int:
    """sigma = sign(G) + e/2."""
    g = goeritz_form_kp(p, sign)
    return matrix_signature(g.matrix) + g.euler_number // 2


def rasmussen_bounds_kp(p: int, sign) -> RasmussenBounds:
    """s >= w - O + 1 on the diagram, and s <= -(-w - O + 1) from the
    mirror."""
    d = kp_diagram_stats(p, sign)
    lower = d.writhe - d.seifert_circles + 1
    upper = -(-d.writhe - d.seifert_circles + 1)
    return RasmussenBounds(lower, upper)


def montesinos_witness(p: int, sign) -> int:
    """s_lower + sigma, which equals 2p - 6."""
    return rasmussen_bounds_kp(p, sign).lower + knot_signature_kp(p, sign)


def montesinos_obstruction(p: int, sign) -> bool:
    """True when |s + sigma| >= 4 is forced, so K_{p+-} is not Montesinos."""
    return montesinos_witness(p, sign) >= 4


def _check_torus(x, y):
    if x == 0 or y == 0 or min(abs(x), abs(y)) < 2:
        raise ValueError("torus knot needs |x|, |y| >= 2")
    if gcd(abs(x), abs(y)) != 1:
        raise ValueError(f"gcd({x}, {y}) != 1: T({x},{y}) is a link")


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return out


def _poly_divexact(num, den):
    # coefficients low degree first; den monic in its top coefficient
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(q) - 1, -1, -1):
        c, rem = divmod(num[k + len(den) - 1], lead)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return q


def _t_power_minus_one(n):
    return [-1] + [0] * (n - 1) + [1]


def torus_alexander(x: int, y: int) -> list:
    """Coefficients of (t^xy - 1)(t - 1) / ((t^x - 1)(t^y - 1)), low degree
    first."""
    _check_torus(x, y)
    x, y = abs(x), abs(y)
    num = _poly_mul(_t_power_minus_one(x * y), _t_power_minus_one(1))
    den = _poly_mul(_t_power_minus_one(x), _t_power_minus_one(y))
    return _poly_divexact(num, den)


def _prime_power_base(n):
    """q if n = q^k for a prime q, else None."""
    for q in range(2, n + 1):
        if q * q > n:
            return n
        if n % q == 0:
            while n % q == 0:
                n //= q
            return q if n == 1 else None
    return None


def _cyclotomic_at_minus_one(d):
    # Phi_d(-t) = Phi_{2d}(t) for odd d > 1, and Phi_d is even in t when
    # 4 | d; both reduce to Phi_n(1), which is q for n = q^k and 1 otherwise
    if d == 1:
        return -2
    if d == 2:
        return 0
    if d % 2:
        return 1
    n = d // 2 if d % 4 else d
    return _prime_power_base(n) or 1


def torus_determinant(x: int, y: int) -> int:
    """|Delta_{T(x,y)}(-1)|, exact.

    Delta_{T(x,y)} is the product of the cyclotomic polynomials Phi_d over
    the divisors d of xy dividing neither x nor y, so the value at -1 is a
    product of small integers.
    """
    _check_torus(x, y)
    x, y = abs(x), abs(y)
    n = x * y
    det = 1
    for d in _divisors(n):
        if x % d and y % d:
            det *= _cyclotomic_at_minus_one(d)
    return abs(det)


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def torus_two_genus(x: int, y: int) -> int:
    """2g(T(x,y)) = (x-1)(y-1), also s(T(x,y)) for the positive torus knot."""
    if x <= 0 or y <= 0:
        raise ValueError("positive torus knot parameters required")
    _check_torus(x, y)
    return (x - 1) * (y - 1)


def homology_order_of_surgery(r: int):
    """|H_1(K(r))| = |r|; ``"infinite"`` for r = 0."""
    r = int(r)
    return "infinite" if r == 0 else abs(r)


def braid_index_three_determinants() -> frozenset:
    """Determinants of T(3, x); they depend only on x mod 6."""
    return frozenset(torus_determinant(3, x) for x in range(2, 8) if x % 3)


def torus_elimination_report(p: int, sign) -> dict:
    _check_odd("p", p, 5)
    e = sign_value(sign)
    det = homology_order_of_surgery(4 * p + e)
    three = braid_index_three_determinants()
    # braid index four: det T(4, x) = x forces x = det
    forced = (4, det)
    two_g = torus_two_genus(*forced)
    upper = rasmussen_bounds_kp(p, sign).upper
    return {
        "det": det,
        "braid_index_three_excluded": det not in three,
        "forced_torus_knot": list(forced),
        "forced_det_matches": torus_determinant(*forced) == det,
        "s_upper": upper,
        "torus_s": two_g,
        "excluded": det not in three and torus_determinant(*forced) == det
                    and upper < two_g,
    }


def torus_elimination(p: int, sign) -> bool:
    """True when K_{p+-} cannot be a torus knot of braid index <= 4."""
    return torus_elimination_report(p, sign)["excluded"]


def kp_invariants(p: int, sign) -> dict:
    """The per-(p, sign) record of the invariant sweep."""
    b = rasmussen_bounds_kp(p, sign)
    return {
        "p": p,
        "sign": "+" if sign_value(sign) > 0 else "-",
        "writhe": kp_diagram_stats(p, sign).writhe,
        "sigma": knot_signature_kp(p, sign),
        "s_lower": b.lower,
        "s_upper": b.upper,
        "det": homology_order_of_surgery(4 * p + sign_value(sign)),
        "montesinos_excluded": montesinos_obstruction(p, sign),
        "torus_excluded": torus_elimination(p, sign),
    }
