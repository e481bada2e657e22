"""
Numerical check of the hyperbolic M_{p,q} against the magic manifold
triangulation.
"""
from __future__ import annotations

import numpy as np

from ..magic import classify_mpq, mpq_filling
from ..slopes import normalize
from .bundled import load_bundled
from .core import IdealTriangulation
from .solver import (DEFAULT_MAX_ITER, DEFAULT_TOL, POSITIVITY_EPS, Status,
                     signed_volume, solve_by_continuation, solve_geometric,
                     volume)


class FillingSolveError(RuntimeError):
    """A solver failure, tagged with the filling that caused it."""


def magic_fillings(p: int, q: int) -> dict:
    """Cusp 0 gets the slope for p and cusp 1 the slope for q; cusp 2 stays
    complete."""
    mpq_filling(p, q)    # validates p and q
    k, l = (p - 1) // 2, (q - 1) // 2
    return {0: normalize(-(k + 1), k), 1: normalize(-(l + 1), l)}


def verify_mpq_geometry(p: int, q: int, T: IdealTriangulation = None,
                        tol=DEFAULT_TOL, max_iter=DEFAULT_MAX_ITER) -> dict:
    """Solve the gluing equations of N filled to M_{p,q} and compare with
    the expected classification.

    ``agrees`` is True when a Geometric solution matches a hyperbolic
    verdict or a non-geometric one matches an SFS verdict; a hyperbolic
    verdict without a Geometric solution is reported as ``"unconfirmed"``,
    since solver failure does not prove anything.
    """
    expected = classify_mpq(p, q)
    if T is None:
        T = load_bundled("magic")
    fillings = magic_fillings(p, q)
    label = f"N({fillings[0]}, {fillings[1]})"
    try:
        sol = solve_geometric(T, fillings, tol=tol, max_iter=max_iter)
    except (ValueError, np.linalg.LinAlgError) as exc:
        raise FillingSolveError(f"solving {label} for M_{p},{q}: {exc}") from exc
    report = {
        "p": p,
        "q": q,
        "filling": label,
        "status": sol.status.value,
        "volume": volume(sol) if sol.is_geometric else None,
        "residual": sol.residual,
        "iterations": sol.iterations,
        "expected": expected.to_json(),
    }
    if sol.diagnostic:
        report["diagnostic"] = sol.diagnostic
    if sol.is_geometric:
        report["agrees"] = expected.kind == "Hyperbolic"
    elif expected.kind == "SFS":
        report["agrees"] = True
    else:
        report["agrees"] = "unconfirmed"
        report["continuation"] = _continuation_evidence(T, fillings, tol)
    return report


def _continuation_evidence(T, fillings, tol) -> dict:
    """Track the filling from the complete structure without positivity.
    A converged endpoint with negatively oriented tetrahedra shows that the
    solution exists but this triangulation cannot realize it geometrically."""
    sol = solve_by_continuation(T, fillings, tol=tol)
    out = {"status": sol.status.value, "residual": sol.residual}
    if sol.status is not Status.NOT_CONVERGED:
        z = sol.shapes
        out["signed_volume"] = signed_volume(z)
        out["negative_tetrahedra"] = int(np.sum(z.imag < -POSITIVITY_EPS))
        out["flat_tetrahedra"] = int(np.sum(np.abs(z.imag) <= POSITIVITY_EPS))
    return out
