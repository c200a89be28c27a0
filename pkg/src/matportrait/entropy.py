"""Von Neumann entropy and the mutual information of a matrix under a block factorization."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotDensityError, NotPSDError, PortraitError
from .linalg import (
    PSD_TOL,
    HermitianMatrix,
    ValidationLevel,
    _coerce_hermitian,
    _eigvalsh,
    validate_hermitian,
)
from .portrait import BlockFactorization, EmbeddingSpec, embed, portrait_pair


def _clamped_spectrum(w: np.ndarray, psd_tol: float) -> np.ndarray:
    """Zero out the [-psd_tol * s, 0) band; reject eigenvalues below it."""
    s = max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    if w.size and float(w[0]) < -psd_tol * s:
        raise NotPSDError(f"eigenvalue {w[0]:.3e} below the clamp band -{psd_tol * s:.3e}")
    return np.where(w > 0.0, w, 0.0)


def entropy_from_spectrum(w: np.ndarray, psd_tol: float = PSD_TOL) -> float:
    w = _clamped_spectrum(np.asarray(w, dtype=np.float64), psd_tol)
    pos = w[w > 0.0]
    # + 0.0 folds an IEEE negative zero (pure spectra) back to plain zero
    return float(-np.sum(pos * np.log(pos))) + 0.0 if pos.size else 0.0


def von_neumann_entropy(A, psd_tol: float = PSD_TOL) -> float:
    """-Tr A ln A over the spectrum, in nats, with the 0 ln 0 = 0 convention.

    A must be Hermitian PSD within the clamp band; its trace need not be 1.
    """
    return entropy_from_spectrum(_eigvalsh(_coerce_hermitian(A)), psd_tol)


def ensure_density(A, trace_tol: float | None = None) -> HermitianMatrix:
    """Validate A as a density matrix, mapping any validation failure to NotDensityError."""
    if isinstance(A, HermitianMatrix) and A.level is ValidationLevel.DENSITY:
        return A
    kwargs = {} if trace_tol is None else {"trace_tol": trace_tol}
    try:
        matrix = A.matrix if isinstance(A, HermitianMatrix) else A
        return validate_hermitian(matrix, ValidationLevel.DENSITY, **kwargs)
    except PortraitError as exc:
        raise NotDensityError(f"not a density matrix: {exc}") from exc


@dataclass(frozen=True)
class MutualInformationResult:
    """Mutual information of a matrix with respect to one block factorization, in nats."""

    value: float
    entropy_joint: float
    entropy_left: float
    entropy_right: float


def mutual_matrix_information(A, f: BlockFactorization) -> MutualInformationResult:
    """S(left) + S(right) - S(A) for a density matrix A; nonnegative by subadditivity."""
    rho = ensure_density(A).matrix
    pair = portrait_pair(rho, f)
    s_joint = von_neumann_entropy(rho)
    s_left = von_neumann_entropy(pair.left)
    s_right = von_neumann_entropy(pair.right)
    return MutualInformationResult(s_left + s_right - s_joint, s_joint, s_left, s_right)


def mutual_information_via_embedding(A, f: BlockFactorization) -> MutualInformationResult:
    """The same quantity computed from the N x N zero-padded images.

    Padding contributes only zero eigenvalues, so this agrees with
    mutual_matrix_information to within eigensolver accuracy.
    """
    rho = ensure_density(A).matrix
    N = rho.shape[0]
    pair = portrait_pair(rho, f)
    spec = EmbeddingSpec(target_dim=N, offset=0)
    s_joint = von_neumann_entropy(rho)
    s_left = von_neumann_entropy(embed(pair.left, spec))
    s_right = von_neumann_entropy(embed(pair.right, spec))
    return MutualInformationResult(s_left + s_right - s_joint, s_joint, s_left, s_right)
