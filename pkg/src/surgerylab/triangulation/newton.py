"""Damped Newton iteration for log-form gluing equations.

Each equation reads ``A @ w + B @ log(1 - exp(w)) = c * pi * i`` in the
log-shapes ``w``.  By default shapes are kept in the upper half plane
(``0 < Im w < pi``) by halving any step that would leave it.
"""
import numpy as np

PI_I = np.pi * 1j


def residual(A, B, c, w, modular=None):
    z = np.exp(w)
    F = A @ w + B @ np.log(1 - z) - PI_I * c
    if modular is not None and modular.any():
        F[modular] -= 2j * np.pi * np.round(F[modular].imag / (2 * np.pi))
    return F


def jacobian(A, B, w):
    z = np.exp(w)
    return A + B * (-z / (1 - z))[None, :]


def newton(A, B, c, w0, tol=1e-12, max_iter=100, modular=None, upper=True):
    """Returns ``(w, max_residual, iterations, converged, diagnostic)``.

    With ``upper=False`` shapes may cross the real axis; ``w`` then follows
    the analytic continuation of the logarithms.
    """
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    c = np.asarray(c, dtype=float)
    w = np.array(w0, dtype=complex)
    n = w.size
    F = residual(A, B, c, w, modular)
    err = np.abs(F).max()
    for it in range(max_iter + 1):
        if err < tol:
            return w, err, it, True, ""
        if it == max_iter:
            break
        J = jacobian(A, B, w)
        if not np.all(np.isfinite(J)):
            return w, err, it, False, "shapes left the finite plane"
        sv = np.linalg.svd(J, compute_uv=False)
        if sv[-1] <= 1e-13 * sv[0] or sv.size < n:
            return w, err, it, False, "singular Jacobian"
        step = np.linalg.lstsq(J, -F, rcond=None)[0]
        t = 1.0
        while True:
            trial = w + t * step
            if not upper or np.all((trial.imag > 0) & (trial.imag < np.pi)):
                F_trial = residual(A, B, c, trial, modular)
                err_trial = np.abs(F_trial).max()
                # accept full steps, backtrack only while moving uphill;
                # off the half plane only strict descent is safe
                if np.isfinite(err_trial) and (err_trial < err or (upper and t == 1.0)):
                    break
            t *= 0.5
            if t < 1e-12:
                where = " at the boundary" if upper else ""
                return w, err, it, False, "step damping stalled" + where
        w, F, err = trial, F_trial, err_trial
    return w, err, max_iter, False, "maximum iterations reached"
