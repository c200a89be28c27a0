"""Block portraits of complex matrices, matrix entropies, and the inequalities
relating them, with reproducible random ensembles and a service/CLI front end."""

from .errors import (
    DimensionMismatchError,
    DomainError,
    EmptyKeepError,
    MatrixFileError,
    NoConvergenceError,
    NotDensityError,
    NotFiniteError,
    NotHermitianError,
    NotPSDError,
    NotSquareError,
    NotUnitTraceError,
    PortraitError,
    ShiftTooSmallError,
    SpecTooSmallError,
    ZeroTraceError,
)
from .linalg import (
    HERM_TOL,
    PSD_TOL,
    TRACE_TOL,
    Eigendecomposition,
    HermitianMatrix,
    ValidationLevel,
    eigh,
    frobenius_norm,
    kron,
    min_eigenvalue,
    spectral_apply,
    validate_hermitian,
)
from .portrait import (
    BlockFactorization,
    ChainFactorization,
    EmbeddingSpec,
    PortraitPair,
    block_trace_map,
    chain_portrait,
    diagonal_block_sum,
    embed,
    portrait_pair,
    shift,
)
from .entropy import (
    MutualInformationResult,
    ensure_density,
    entropy_from_spectrum,
    mutual_information_via_embedding,
    mutual_matrix_information,
    von_neumann_entropy,
)
from .inequalities import (
    DEFAULT_SLACK_TOL,
    INEQUALITY_NAMES,
    InequalityReport,
    check_padded_subadditivity,
    check_scaled,
    check_shifted,
    check_ssa_analog,
    check_subadditivity,
)
from .randgen import (
    SeededGenerator,
    haar_unitary,
    random_hermitian,
    random_mixed_density,
    random_pure_density,
    random_separable,
)
from .sweeps import (
    BatchSummary,
    DimSummary,
    balanced_factorization,
    default_radices,
    run_batch,
    smallest_composite_target,
)

__all__ = [
    "BatchSummary",
    "BlockFactorization",
    "ChainFactorization",
    "DEFAULT_SLACK_TOL",
    "DimSummary",
    "DimensionMismatchError",
    "DomainError",
    "Eigendecomposition",
    "EmbeddingSpec",
    "EmptyKeepError",
    "HERM_TOL",
    "HermitianMatrix",
    "INEQUALITY_NAMES",
    "InequalityReport",
    "MatrixFileError",
    "MutualInformationResult",
    "NoConvergenceError",
    "NotDensityError",
    "NotFiniteError",
    "NotHermitianError",
    "NotPSDError",
    "NotSquareError",
    "NotUnitTraceError",
    "PSD_TOL",
    "PortraitError",
    "PortraitPair",
    "SeededGenerator",
    "ShiftTooSmallError",
    "SpecTooSmallError",
    "TRACE_TOL",
    "ValidationLevel",
    "ZeroTraceError",
    "balanced_factorization",
    "block_trace_map",
    "chain_portrait",
    "check_padded_subadditivity",
    "check_scaled",
    "check_shifted",
    "check_ssa_analog",
    "check_subadditivity",
    "default_radices",
    "diagonal_block_sum",
    "eigh",
    "embed",
    "ensure_density",
    "entropy_from_spectrum",
    "frobenius_norm",
    "haar_unitary",
    "kron",
    "min_eigenvalue",
    "mutual_information_via_embedding",
    "mutual_matrix_information",
    "portrait_pair",
    "random_hermitian",
    "random_mixed_density",
    "random_pure_density",
    "random_separable",
    "run_batch",
    "shift",
    "smallest_composite_target",
    "spectral_apply",
    "validate_hermitian",
    "von_neumann_entropy",
]
