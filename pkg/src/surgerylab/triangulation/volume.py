"""
Dilogarithm, Bloch-Wigner function and Lobachevsky function.
"""
import cmath
import math
from fractions import Fraction
from functools import lru_cache


@lru_cache(maxsize=None)
def _bernoulli(nmax):
    """Bernoulli numbers B_0..B_nmax with B_1 = -1/2."""
    B = [Fraction(0)] * (nmax + 1)
    B[0] = Fraction(1)
    for m in range(1, nmax + 1):
        s = Fraction(0)
        binom = 1
        for k in range(m):
            s += binom * B[k]
            binom = binom * (m + 1 - k) // (k + 1)
        B[m] = -s / (m + 1)
    return tuple(B)


_NTERMS = 40
_COEFFS = tuple(float(b) / math.factorial(n + 1)
                for n, b in enumerate(_bernoulli(_NTERMS)))


def _dilog_core(z):
    # |z| <= 1, Re z <= 1/2: series in u = -log(1 - z), |u| < 1.4
    u = -cmath.log(1 - z)
    total = 0j
    power = u
    for c in _COEFFS:
        if c:
            total += c * power
        power *= u
    return total


def dilog(z) -> complex:
    """Principal branch of Li_2(z)."""
    z = complex(z)
    if z == 0:
        return 0j
    if z == 1:
        return complex(math.pi ** 2 / 6)
    if abs(z) > 1:
        # inversion
        return -dilog(1 / z) - math.pi ** 2 / 6 - 0.5 * cmath.log(-z) ** 2
    if z.real > 0.5:
        # reflection
        return -_dilog_core(1 - z) + math.pi ** 2 / 6 - cmath.log(z) * cmath.log(1 - z)
    return _dilog_core(z)


def bloch_wigner(z) -> float:
    """D(z) = Im Li_2(z) + arg(1 - z) log|z|; the volume of an ideal
    tetrahedron of shape ``z`` when Im z > 0."""
    z = complex(z)
    if z.imag == 0:
        return 0.0
    # D(z) = -D(1/z) = -D(1 - z) keeps the evaluation away from branch cuts
    sign = 1.0
    if abs(z) > 1:
        z, sign = 1 / z, -sign
    if z.real > 0.5:
        z, sign = 1 - z, -sign
    return sign * (dilog(z).imag + cmath.phase(1 - z) * math.log(abs(z)))


def lobachevsky(theta: float) -> float:
    """Lobachevsky function, via the Clausen series for Cl_2(2 theta)/2."""
    x = math.fmod(2 * theta, 2 * math.pi)
    if x > math.pi:
        x -= 2 * math.pi
    elif x < -math.pi:
        x += 2 * math.pi
    if x == 0:
        return 0.0
    ax = abs(x)
    B = _bernoulli(2 * _NTERMS)
    s = ax - ax * math.log(ax)
    for k in range(1, _NTERMS):
        term = abs(float(B[2 * k])) * ax ** (2 * k + 1) / (2 * k * math.factorial(2 * k + 1))
        s += term
        if term < 1e-18:
            break
    return math.copysign(s, x) / 2


def tetrahedron_volume_angles(z) -> float:
    """Volume of the ideal tetrahedron of shape z as a sum of Lobachevsky
    functions of its dihedral angles."""
    z = complex(z)
    a = cmath.phase(z)
    b = cmath.phase(1 / (1 - z))
    return lobachevsky(a) + lobachevsky(b) + lobachevsky(math.pi - a - b)


REGULAR_TETRAHEDRON_VOLUME = 3 * lobachevsky(math.pi / 3)
