"""Small dense eigensolver used by the virtual-atom path.

A complex Hermitian ``H = A + iB`` is embedded in the real symmetric matrix
``[[A, -B], [B, A]]``, whose spectrum is that of ``H`` with every eigenvalue
repeated twice. The real problem is solved with cyclic Jacobi rotations.
"""
from __future__ import annotations

import math

import numpy as np

OFF_TOLERANCE = 1e-14
MAX_SWEEPS = 100


def _off_norm(a: np.ndarray) -> float:
    return math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))


def jacobi_eigvalsh(a, tol: float = OFF_TOLERANCE, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a real symmetric matrix, ascending.

    Sweeps over all ``(p, q)`` pairs in row order until the off-diagonal
    Frobenius norm drops below ``tol * max(1, ||a||_F)``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("expected a square matrix")
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    for _ in range(max_sweeps):
        if _off_norm(a) < threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) * 1e100 < abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = math.copysign(1.0, theta) / (abs(theta) + math.hypot(theta, 1.0))
                c = 1.0 / math.hypot(t, 1.0)
                s = t * c
                col_p, col_q = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p, row_q = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))


def real_embedding(h) -> np.ndarray:
    h = np.asarray(h, dtype=complex)
    re, im = h.real, h.imag
    return np.block([[re, -im], [im, re]])


def hermitian_eigvalsh(h, tol: float = OFF_TOLERANCE) -> np.ndarray:
    """Eigenvalues of a complex Hermitian matrix, descending."""
    h = np.asarray(h, dtype=complex)
    doubled = jacobi_eigvalsh(real_embedding(h), tol=tol)[::-1]
    # Each eigenvalue appears twice in the embedding; average the pairs.
    return 0.5 * (doubled[0::2] + doubled[1::2])
