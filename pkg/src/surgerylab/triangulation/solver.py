"""
Hyperbolic structures on ideal triangulations by Newton's method.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .core import IdealTriangulation
from .equations import REGULAR_LOG_SHAPE, gluing_system, normalize_fillings
from .newton import newton, residual
from .volume import bloch_wigner

POSITIVITY_EPS = 1e-9
DEFAULT_TOL = 1e-12
DEFAULT_MAX_ITER = 100


class Status(str, Enum):
    GEOMETRIC = "Geometric"
    DEGENERATE = "Degenerate"
    NOT_CONVERGED = "NotConverged"


@dataclass
class ShapeAssignment:
    shapes: np.ndarray
    status: Status
    residual: float
    iterations: int
    diagnostic: str = ""
    fillings: list = field(default_factory=list)

    @property
    def is_geometric(self) -> bool:
        return self.status is Status.GEOMETRIC

    def to_json(self) -> dict:
        out = {
            "status": self.status.value,
            "shapes": [[float(z.real), float(z.imag)] for z in self.shapes],
            "residual": float(self.residual),
            "iterations": self.iterations,
            "fillings": {str(f.cusp): (None if f.complete else str(f.slope))
                         for f in self.fillings},
        }
        out["volume"] = volume(self) if self.is_geometric else None
        if self.diagnostic:
            out["diagnostic"] = self.diagnostic
        return out


def solve_geometric(T: IdealTriangulation, fillings=None, tol=DEFAULT_TOL,
                    max_iter=DEFAULT_MAX_ITER, eps=POSITIVITY_EPS,
                    initial=None) -> ShapeAssignment:
    """Solve the gluing equations, starting from regular shapes.

    ``fillings`` is a list of :class:`FillingInstruction` or a dict
    ``{cusp: slope}``; unlisted cusps stay complete.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    fillings = normalize_fillings(T, fillings)
    system = gluing_system(T, fillings)
    A, B, c = system.matrices()
    if initial is None:
        w0 = np.full(T.num_tetrahedra, REGULAR_LOG_SHAPE)
    else:
        w0 = np.log(np.asarray(initial, dtype=complex))
    w, err, iters, converged, diag = newton(A, B, c, w0, tol=tol,
                                            max_iter=max_iter)
    shapes = np.exp(w)
    if not converged:
        status = Status.NOT_CONVERGED
    elif min_corner_imag(shapes) > eps:
        status = Status.GEOMETRIC
    else:
        status = Status.DEGENERATE
    return ShapeAssignment(shapes, status, float(err), iters, diag, fillings)


def solve_by_continuation(T: IdealTriangulation, fillings=None, steps=64,
                          tol=DEFAULT_TOL, eps=POSITIVITY_EPS) -> ShapeAssignment:
    """Follow the filling from the complete structure without the
    upper half plane constraint.

    Every filled cusp's right-hand side is scaled from 0 (the complete
    structure) to ``2*pi*i``, i.e. the coefficients run in from infinity.
    Shapes may turn negative along the way, so this finds structures with
    negatively oriented tetrahedra that :func:`solve_geometric` reports as
    non-geometric.  The result still carries the usual status.
    """
    complete = solve_geometric(T, tol=tol, eps=eps)
    if complete.status is Status.NOT_CONVERGED:
        return complete
    fillings = normalize_fillings(T, fillings)
    system = gluing_system(T, fillings)
    A, B, c = system.matrices()
    c = c.astype(float)
    filled = np.array([e.kind == "filling" for e in system.equations])
    w = np.log(complete.shapes)
    total = 0
    err, converged, diag = complete.residual, True, ""
    for j in range(1, steps + 1):
        target = c - 2.0 * filled * (1 - j / steps)
        w, err, iters, converged, diag = newton(A, B, target, w, tol=tol,
                                                max_iter=DEFAULT_MAX_ITER,
                                                upper=False)
        total += iters
        if not converged:
            break
    shapes = np.exp(w)
    if not converged:
        status = Status.NOT_CONVERGED
    elif min_corner_imag(shapes) > eps:
        status = Status.GEOMETRIC
    else:
        status = Status.DEGENERATE
    return ShapeAssignment(shapes, status, float(err), total, diag, fillings)


def signed_volume(shapes) -> float:
    """Sum of Bloch-Wigner terms; negatively oriented tetrahedra count
    negatively."""
    return float(sum(bloch_wigner(z) for z in shapes))


def min_corner_imag(shapes) -> float:
    """Smallest imaginary part among the corner parameters z, z', z''."""
    z = np.asarray(shapes, dtype=complex)
    return float(min(z.imag.min(), (1 / (1 - z)).imag.min(), (1 - 1 / z).imag.min()))


def equation_residuals(T, fillings, shapes) -> np.ndarray:
    A, B, c = gluing_system(T, fillings).matrices()
    return residual(np.asarray(A, float), np.asarray(B, float),
                    np.asarray(c, float), np.log(np.asarray(shapes, complex)))


def volume(s: ShapeAssignment) -> float:
    if not s.is_geometric:
        raise ValueError(f"volume needs a geometric solution, got {s.status.value}")
    return float(sum(bloch_wigner(z) for z in s.shapes))
