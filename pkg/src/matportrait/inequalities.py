"""Verifiers for the entropic matrix inequalities.

Every checker returns an InequalityReport comparing a left-hand side against a
right-hand side, with the individual entropy terms broken out so callers can pin
either arrangement of an inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    ShiftTooSmallError,
    ZeroTraceError,
)
from .linalg import (
    PSD_TOL,
    HermitianMatrix,
    ValidationLevel,
    _coerce_hermitian,
    _eigvalsh,
    validate_hermitian,
)
from .entropy import ensure_density, entropy_from_spectrum, von_neumann_entropy
from .portrait import (
    BlockFactorization,
    ChainFactorization,
    EmbeddingSpec,
    chain_portrait,
    embed,
    portrait_pair,
    shift,
)

DEFAULT_SLACK_TOL = 1e-9

INEQUALITY_NAMES = {
    "subadd": "subadditivity",
    "scaled": "scaled-subadditivity",
    "shifted": "shifted-subadditivity",
    "ssa": "strong-subadditivity-analog",
}


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one inequality check: lhs <= rhs up to the tolerance on the slack."""

    lhs: float
    rhs: float
    slack: float
    tolerance: float
    satisfied: bool
    terms: dict[str, float]


def _report(lhs: float, rhs: float, tol: float, terms: dict[str, float]) -> InequalityReport:
    lhs, rhs, tol = float(lhs), float(rhs), float(tol)
    slack = rhs - lhs
    return InequalityReport(
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        tolerance=tol,
        satisfied=bool(slack >= -tol),
        terms={k: float(v) for k, v in terms.items()},
    )


def _xlogx(t: float) -> float:
    return 0.0 if t <= 0.0 else t * math.log(t)


def check_subadditivity(A, f: BlockFactorization, tol: float = DEFAULT_SLACK_TOL) -> InequalityReport:
    """S(A) <= S(left) + S(right) for a density matrix A presented in n x m blocks."""
    rho = ensure_density(A).matrix
    pair = portrait_pair(rho, f)
    s_joint = von_neumann_entropy(rho)
    s_left = von_neumann_entropy(pair.left)
    s_right = von_neumann_entropy(pair.right)
    terms = {"entropy_joint": s_joint, "entropy_left": s_left, "entropy_right": s_right}
    return _report(s_joint, s_left + s_right, tol, terms)


def check_padded_subadditivity(
    A,
    spec: EmbeddingSpec,
    f: BlockFactorization,
    tol: float = DEFAULT_SLACK_TOL,
) -> InequalityReport:
    """Subadditivity through a zero-padded embedding whose target dimension is n*m.

    The left-hand side is S(A) itself: zero padding only adds zero eigenvalues.
    """
    rho = ensure_density(A).matrix
    if spec.target_dim != f.dim:
        raise DimensionMismatchError(
            f"embedding target {spec.target_dim} does not match the factorization {f.n}*{f.m}"
        )
    padded = embed(rho, spec)
    pair = portrait_pair(padded, f)
    s_joint = von_neumann_entropy(rho)
    s_left = von_neumann_entropy(pair.left)
    s_right = von_neumann_entropy(pair.right)
    terms = {"entropy_joint": s_joint, "entropy_left": s_left, "entropy_right": s_right}
    return _report(s_joint, s_left + s_right, tol, terms)


def check_scaled(A, f: BlockFactorization, tol: float = DEFAULT_SLACK_TOL) -> InequalityReport:
    """Subadditivity for a PSD matrix of arbitrary positive trace mu, with the
    mu ln(mu) correction on the right-hand side."""
    if isinstance(A, HermitianMatrix) and A.level in (ValidationLevel.PSD, ValidationLevel.DENSITY):
        matrix = A.matrix
    else:
        matrix = validate_hermitian(
            A.matrix if isinstance(A, HermitianMatrix) else A, ValidationLevel.PSD
        ).matrix
    mu = float(np.trace(matrix).real)
    if mu <= 0.0:
        raise ZeroTraceError(f"trace must be positive, got {mu!r}")
    pair = portrait_pair(matrix, f)
    s_joint = von_neumann_entropy(matrix)
    s_left = von_neumann_entropy(pair.left)
    s_right = von_neumann_entropy(pair.right)
    trace_term = _xlogx(mu)
    terms = {
        "entropy_joint": s_joint,
        "entropy_left": s_left,
        "entropy_right": s_right,
        "trace_term": trace_term,
    }
    return _report(s_joint, s_left + s_right + trace_term, tol, terms)


def check_shifted(
    A,
    spec: EmbeddingSpec,
    f: BlockFactorization,
    x: float,
    tol: float = DEFAULT_SLACK_TOL,
    psd_tol: float = PSD_TOL,
) -> InequalityReport:
    """The inequality for an arbitrary Hermitian matrix, via embedding and identity shift.

    A is zero-padded to the factorizable target dimension and shifted by x so the
    result is PSD; the check then reads
    -Tr A' ln A' <= -Tr A'_left ln A'_left - Tr A'_right ln A'_right + (Tr A') ln(Tr A').
    ``terms`` also carries the regrouped arrangement that moves the trace term to
    the left-hand side (``grouped_lhs`` / ``grouped_rhs``).
    """
    matrix = _coerce_hermitian(A)
    if spec.target_dim != f.dim:
        raise DimensionMismatchError(
            f"embedding target {spec.target_dim} does not match the factorization {f.n}*{f.m}"
        )
    shifted = shift(embed(matrix, spec), x)
    w = _eigvalsh(shifted)
    scale = max(1.0, float(np.max(np.abs(w))) if w.size else 0.0)
    if w.size and float(w[0]) < -psd_tol * scale:
        raise ShiftTooSmallError(
            f"shift x={x!r} leaves minimum eigenvalue {w[0]:.3e}; the shifted matrix is not PSD"
        )
    pair = portrait_pair(shifted, f)
    s_shifted = entropy_from_spectrum(w, psd_tol)
    s_left = von_neumann_entropy(pair.left, psd_tol)
    s_right = von_neumann_entropy(pair.right, psd_tol)
    total = float(np.trace(shifted).real)
    trace_term = _xlogx(total)
    terms = {
        "entropy_shifted": s_shifted,
        "entropy_left": s_left,
        "entropy_right": s_right,
        "trace_term": trace_term,
        "grouped_lhs": s_shifted - trace_term,
        "grouped_rhs": s_left + s_right,
    }
    return _report(s_shifted, s_left + s_right + trace_term, tol, terms)


def check_ssa_analog(
    A,
    radices,
    tol: float = DEFAULT_SLACK_TOL,
) -> InequalityReport:
    """Strong-subadditivity analog over a three-factor chain:
    S(A) + S(A_mid) <= S(A_first_pair) + S(A_last_pair)."""
    radices = tuple(int(r) for r in radices)
    if len(radices) != 3:
        raise DimensionMismatchError(f"expected exactly three radices, got {radices}")
    rho = ensure_density(A).matrix
    mid = chain_portrait(rho, ChainFactorization(radices, {2}))
    first_pair = chain_portrait(rho, ChainFactorization(radices, {1, 2}))
    last_pair = chain_portrait(rho, ChainFactorization(radices, {2, 3}))
    s_joint = von_neumann_entropy(rho)
    s_mid = von_neumann_entropy(mid)
    s_12 = von_neumann_entropy(first_pair)
    s_23 = von_neumann_entropy(last_pair)
    terms = {
        "entropy_joint": s_joint,
        "entropy_mid": s_mid,
        "entropy_first_pair": s_12,
        "entropy_last_pair": s_23,
    }
    return _report(s_joint + s_mid, s_12 + s_23, tol, terms)
