"""Cyclic Jacobi eigensolver for dense real symmetric matrices."""
from __future__ import annotations

import numpy as np

from exchstat.errors import AsymmetricOperatorError, NoConvergenceError

SYMMETRY_TOL = 1e-12
MAX_SWEEPS = 50


def check_symmetric(a: np.ndarray, tol: float = SYMMETRY_TOL) -> None:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise AsymmetricOperatorError(f"matrix is not square: shape {a.shape}")
    if a.size and np.max(np.abs(a - a.T)) > tol:
        raise AsymmetricOperatorError(f"max |A - A^T| = {np.max(np.abs(a - a.T)):.3e} exceeds {tol}")


def _off_diagonal_norm(a: np.ndarray) -> float:
    # summing the off-diagonal squares directly; total minus diagonal cancels badly
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def jacobi_eigh(a, tol: float = 1e-9, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and eigenvectors (columns) of a symmetric matrix.

    Raises:
        AsymmetricOperatorError: if ``a`` is not symmetric to 1e-12.
        NoConvergenceError: if off-diagonal mass survives ``max_sweeps`` sweeps,
            or an eigenpair residual exceeds ``tol * ||A||``.
    """
    a0 = np.array(a, dtype=float)
    check_symmetric(a0)
    n = a0.shape[0]
    if n == 0:
        return np.zeros(0), np.zeros((0, 0))
    work = a0.copy()
    vecs = np.eye(n)
    norm = np.linalg.norm(a0)
    # off-diagonal mass cannot drop much below round-off of the full matrix
    target = 4 * n * np.finfo(float).eps * norm
    converged = False
    for _ in range(max_sweeps):
        off = _off_diagonal_norm(work)
        if off <= target:
            converged = True
            break
        rotations = 0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= 1e-300 or abs(apq) <= 1e-18 * norm:
                    continue
                theta = (work[q, q] - work[p, p]) / (2.0 * apq)
                t = np.sign(theta) / (abs(theta) + np.sqrt(theta * theta + 1.0)) if theta != 0 else 1.0
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp, rq = work[p, :].copy(), work[q, :].copy()
                work[p, :] = c * rp - s * rq
                work[q, :] = s * rp + c * rq
                cp, cq = work[:, p].copy(), work[:, q].copy()
                work[:, p] = c * cp - s * cq
                work[:, q] = s * cp + c * cq
                vp, vq = vecs[:, p].copy(), vecs[:, q].copy()
                vecs[:, p] = c * vp - s * vq
                vecs[:, q] = s * vp + c * vq
                rotations += 1
        if rotations == 0:
            converged = True
            break
    else:
        off = _off_diagonal_norm(work)
        converged = off <= target
    if not converged:
        raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    vals = np.diag(work).copy()
    order = np.argsort(vals, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    residual = np.linalg.norm(a0 @ vecs - vecs * vals, axis=0)
    scale = norm or 1.0
    if residual.size and residual.max() > tol * scale:
        raise NoConvergenceError(f"eigenpair residual {residual.max():.3e} exceeds {tol} * ||A||")
    return vals, vecs


def eigenvalues_symmetric(op, tol: float = 1e-9) -> list[float]:
    """Sorted eigenvalues of a ManyBodyOperator or a plain symmetric array."""
    matrix = getattr(op, "matrix", op)
    return [float(x) for x in jacobi_eigh(matrix, tol)[0]]
