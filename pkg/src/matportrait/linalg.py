"""Dense complex matrix substrate: validated Hermitian matrices, eigendecomposition,
and spectral function calculus.

All operations are pure functions on immutable values; wrapped matrices are stored
as read-only copies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .errors import (
    DomainError,
    NoConvergenceError,
    NotFiniteError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
    NotUnitTraceError,
)

# Default validation tolerances; every validating entry point takes keyword
# overrides for callers that need looser or tighter bands.
HERM_TOL = 1e-12
PSD_TOL = 1e-10
TRACE_TOL = 1e-10

# Relative cutoff deciding which eigenvector component anchors the phase convention.
_PHASE_CUTOFF = 1e-12


class ValidationLevel(str, Enum):
    HERMITIAN = "hermitian"
    PSD = "psd"
    DENSITY = "density"


def as_complex_matrix(data) -> np.ndarray:
    """Coerce to a 2-D complex128 array, rejecting NaN/Inf entries."""
    M = np.asarray(data, dtype=np.complex128)
    if M.ndim != 2:
        raise NotSquareError(f"expected a 2-D matrix, got an array of rank {M.ndim}")
    if not np.all(np.isfinite(M.real)) or not np.all(np.isfinite(M.imag)):
        raise NotFiniteError("matrix contains NaN or Inf entries")
    return M


def require_square(M: np.ndarray) -> np.ndarray:
    M = as_complex_matrix(M)
    if M.shape[0] != M.shape[1]:
        raise NotSquareError(f"matrix is {M.shape[0]}x{M.shape[1]}, not square")
    return M


@dataclass(frozen=True)
class HermitianMatrix:
    """A square complex matrix that passed Hermiticity validation.

    ``level`` records the strongest validation it passed: plain Hermitian,
    positive semidefinite, or density (PSD with unit trace).
    """

    matrix: np.ndarray
    level: ValidationLevel = ValidationLevel.HERMITIAN

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.complex128)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)


@dataclass(frozen=True)
class Eigendecomposition:
    """Eigenvalues (ascending) and orthonormal eigenvector columns of a Hermitian matrix."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        w = np.array(self.eigenvalues, dtype=np.float64)
        v = np.array(self.eigenvectors, dtype=np.complex128)
        w.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "eigenvalues", w)
        object.__setattr__(self, "eigenvectors", v)


def validate_hermitian(
    M,
    level: ValidationLevel | str = ValidationLevel.HERMITIAN,
    herm_tol: float = HERM_TOL,
    psd_tol: float = PSD_TOL,
    trace_tol: float = TRACE_TOL,
) -> HermitianMatrix:
    """Validate ``M`` at the requested level and wrap it; the input is never mutated.

    Raises NotSquareError, NotHermitianError, NotPSDError, or NotUnitTraceError.
    """
    level = ValidationLevel(level)
    M = require_square(M)
    scale = 1.0 + float(np.max(np.abs(M))) if M.size else 1.0
    asym = float(np.max(np.abs(M - M.conj().T))) if M.size else 0.0
    if asym > herm_tol * scale:
        raise NotHermitianError(f"asymmetry {asym:.3e} exceeds {herm_tol:.1e} * (1 + max|A|)")
    if level in (ValidationLevel.PSD, ValidationLevel.DENSITY):
        w = _eigvalsh(M)
        bound = psd_tol * max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
        if w.size and float(w[0]) < -bound:
            raise NotPSDError(f"minimum eigenvalue {w[0]:.3e} below -{bound:.3e}")
    if level is ValidationLevel.DENSITY:
        tr = float(np.trace(M).real)
        if abs(tr - 1.0) > trace_tol:
            raise NotUnitTraceError(f"trace {tr!r} differs from 1 by more than {trace_tol:.1e}")
    return HermitianMatrix(M, level)


def _coerce_hermitian(A) -> np.ndarray:
    if isinstance(A, HermitianMatrix):
        return A.matrix
    return validate_hermitian(A).matrix


def _eigvalsh(M: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.eigvalsh(M)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc


def _fix_phases(V: np.ndarray) -> np.ndarray:
    """Make the first non-negligible component of each eigenvector real positive.

    Gives reproducible decompositions for golden tests; the cutoff is relative to
    the largest component of each column.
    """
    V = V.copy()
    for k in range(V.shape[1]):
        col = V[:, k]
        mags = np.abs(col)
        top = float(mags.max())
        if top == 0.0:
            continue
        idx = int(np.argmax(mags > _PHASE_CUTOFF * top))
        pivot = col[idx]
        mag = abs(pivot)
        if mag > 0.0:
            V[:, k] = col * (pivot.conjugate() / mag)
    return V


def eigh(A) -> Eigendecomposition:
    """Eigendecompose a Hermitian matrix.

    Eigenvalues come back ascending; eigenvector columns are orthonormal with a
    deterministic phase (first non-negligible component real positive), so
    identical inputs give identical outputs.
    """
    M = _coerce_hermitian(A)
    try:
        w, V = np.linalg.eigh(M)
    except np.linalg.LinAlgError as exc:
        raise NoConvergenceError(str(exc)) from exc
    return Eigendecomposition(w, _fix_phases(V))


def spectral_apply(A, f: Callable[[float], float]) -> np.ndarray:
    """Apply a real scalar function to a Hermitian matrix through its spectrum: V f(L) V+.

    Raises DomainError if ``f`` is undefined (non-finite) at any eigenvalue.
    """
    dec = eigh(A)
    w = dec.eigenvalues
    try:
        fw = np.asarray([float(f(float(lam))) for lam in w], dtype=np.float64)
    except (ValueError, ArithmeticError, TypeError) as exc:
        raise DomainError(f"function undefined on the spectrum: {exc}") from exc
    if not np.all(np.isfinite(fw)):
        bad = w[~np.isfinite(fw)]
        raise DomainError(f"function not finite at eigenvalue(s) {bad}")
    V = dec.eigenvectors
    return (V * fw) @ V.conj().T


def kron(B, C) -> np.ndarray:
    """Tensor (Kronecker) product with the left factor major in the composite index."""
    return np.kron(as_complex_matrix(B), as_complex_matrix(C))


def min_eigenvalue(A) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(_eigvalsh(_coerce_hermitian(A))[0])


def frobenius_norm(A) -> float:
    return float(np.linalg.norm(as_complex_matrix(A)))
