"""Independent brute-force reference implementations.

Used only by tests and the service's verify-oracle mode. Nothing here may call
the main matrix-manipulation code paths: portraits are recomputed by explicit
index loops, and the spectrum comes from a hand-rolled cyclic Jacobi scheme for
complex Hermitian matrices rather than LAPACK. Obvious-but-slow is the point.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionMismatchError, NoConvergenceError, NotPSDError
from .linalg import HermitianMatrix
from .portrait import BlockFactorization, PortraitPair

MAX_SWEEPS = 100
OFF_DIAGONAL_TARGET = 1e-14
AGREEMENT_TOL = 1e-8


def oracle_portrait(A, f: BlockFactorization) -> PortraitPair:
    """Both block images recomputed entry by entry from raw composite indices."""
    A = np.asarray(A, dtype=np.complex128)
    n, m = f.n, f.m
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] != n * m:
        raise DimensionMismatchError(f"matrix of shape {A.shape} does not factor as {n}*{m}")
    left = np.zeros((n, n), dtype=np.complex128)
    for j in range(n):
        for k in range(n):
            acc = 0.0 + 0.0j
            for a in range(m):
                acc += A[j * m + a, k * m + a]
            left[j, k] = acc
    right = np.zeros((m, m), dtype=np.complex128)
    for a in range(m):
        for b in range(m):
            acc = 0.0 + 0.0j
            for k in range(n):
                acc += A[k * m + a, k * m + b]
            right[a, b] = acc
    return PortraitPair(left, right)


def jacobi_eigenvalues(A, max_sweeps: int = MAX_SWEEPS) -> np.ndarray:
    """Eigenvalues of a complex Hermitian matrix by cyclic Jacobi rotations, ascending.

    Sweeps the strict upper triangle with unitary 2x2 rotations until the
    off-diagonal Frobenius norm falls below OFF_DIAGONAL_TARGET relative to the
    matrix norm, or raises NoConvergenceError at the sweep cap.
    """
    matrix = A.matrix if isinstance(A, HermitianMatrix) else np.asarray(A, dtype=np.complex128)
    M = np.array(matrix, dtype=np.complex128)
    N = M.shape[0]
    if N == 1:
        return np.asarray([M[0, 0].real], dtype=np.float64)
    norm = math.sqrt(float(np.sum(np.abs(M) ** 2)))
    if norm == 0.0:
        return np.zeros(N, dtype=np.float64)
    threshold = OFF_DIAGONAL_TARGET * norm

    def offdiag() -> float:
        total = 0.0
        for i in range(N):
            for j in range(N):
                if i != j:
                    total += abs(M[i, j]) ** 2
        return math.sqrt(total)

    for _ in range(max_sweeps):
        if offdiag() <= threshold:
            break
        for p in range(N - 1):
            for q in range(p + 1, N):
                beta = abs(M[p, q])
                if beta == 0.0:
                    continue
                phase = M[p, q] / beta
                theta = 0.5 * math.atan2(2.0 * beta, (M[p, p] - M[q, q]).real)
                c = math.cos(theta)
                s = math.sin(theta)
                # Columns p, q of the rotation: col_p' = c*col_p + s*conj(phase)*col_q
                col_p = M[:, p].copy()
                col_q = M[:, q].copy()
                M[:, p] = c * col_p + s * phase.conjugate() * col_q
                M[:, q] = -s * phase * col_p + c * col_q
                row_p = M[p, :].copy()
                row_q = M[q, :].copy()
                M[p, :] = c * row_p + s * phase * row_q
                M[q, :] = -s * phase.conjugate() * row_p + c * row_q
                M[p, q] = 0.0
                M[q, p] = 0.0
    else:
        if offdiag() > threshold:
            raise NoConvergenceError(f"Jacobi scheme did not converge in {max_sweeps} sweeps")
    return np.sort(np.real(np.diagonal(M)))


def oracle_entropy(A, psd_tol: float = 1e-10) -> float:
    """-Tr A ln A via the Jacobi spectrum and compensated summation."""
    w = jacobi_eigenvalues(A)
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    if w.size and float(w[0]) < -psd_tol * scale:
        raise NotPSDError(f"eigenvalue {w[0]:.3e} below the clamp band -{psd_tol * scale:.3e}")
    total = 0.0
    compensation = 0.0
    for lam in w:
        if lam <= 0.0:
            continue
        term = -lam * math.log(lam)
        y = term - compensation
        t = total + y
        compensation = (t - total) - y
        total = t
    return total
