"""Block-structure maps of square matrices.

A square matrix of dimension N = n*m is viewed as an n x n grid of m x m blocks.
Two linear images are defined on that grid: the n x n matrix of block traces and
the m x m sum of diagonal blocks. Both are analogs of partial tracing, preserve
the trace, and preserve Hermiticity. Zero-padding embeddings, identity shifts,
and a mixed-radix chain generalization round out the toolkit.

Index convention: the composite row index is r = j*m + a (0-based), with j the
block (left-factor) index and a the inner (right-factor) index.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from math import prod

import numpy as np

from .errors import DimensionMismatchError, EmptyKeepError, SpecTooSmallError
from .linalg import as_complex_matrix, require_square


@dataclass(frozen=True)
class BlockFactorization:
    """A factorization N = n*m: ``n`` blocks per side, each block ``m`` x ``m``."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 1:
            raise DimensionMismatchError(f"factors must be positive, got ({self.n}, {self.m})")

    @property
    def dim(self) -> int:
        return self.n * self.m


@dataclass(frozen=True)
class PortraitPair:
    """The two images of one matrix: block traces (n x n) and diagonal-block sum (m x m)."""

    left: np.ndarray
    right: np.ndarray

    def __post_init__(self):
        left = np.array(self.left, dtype=np.complex128)
        right = np.array(self.right, dtype=np.complex128)
        left.setflags(write=False)
        right.setflags(write=False)
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)


@dataclass(frozen=True)
class EmbeddingSpec:
    """Zero-padded placement of an N x N matrix inside a target_dim x target_dim one."""

    target_dim: int
    offset: int = 0

    def __post_init__(self):
        if self.target_dim < 1:
            raise SpecTooSmallError(f"target dimension must be positive, got {self.target_dim}")
        if self.offset < 0:
            raise SpecTooSmallError(f"offset must be nonnegative, got {self.offset}")


@dataclass(frozen=True)
class ChainFactorization:
    """A multifactor decomposition N = N_1 * ... * N_M with a kept subset of factors (1-based)."""

    radices: tuple[int, ...]
    keep: frozenset[int]

    def __init__(self, radices, keep):
        object.__setattr__(self, "radices", tuple(int(r) for r in radices))
        object.__setattr__(self, "keep", frozenset(int(k) for k in keep))
        if not self.radices or any(r < 1 for r in self.radices):
            raise DimensionMismatchError(f"radices must be positive integers, got {self.radices}")
        if not self.keep:
            raise EmptyKeepError("the kept factor subset must be nonempty")
        if not self.keep <= set(range(1, len(self.radices) + 1)):
            raise DimensionMismatchError(
                f"keep {sorted(self.keep)} is not a subset of 1..{len(self.radices)}"
            )

    @property
    def dim(self) -> int:
        return prod(self.radices)


def _blocks(A, f: BlockFactorization) -> np.ndarray:
    A = require_square(A)
    if A.shape[0] != f.dim:
        raise DimensionMismatchError(
            f"matrix dimension {A.shape[0]} is not the product {f.n}*{f.m}"
        )
    return A.reshape(f.n, f.m, f.n, f.m)


def block_trace_map(A, f: BlockFactorization) -> np.ndarray:
    """Map A to the n x n matrix whose (j, k) entry is the trace of block (j, k)."""
    return np.ascontiguousarray(np.einsum("jaka->jk", _blocks(A, f)))


def diagonal_block_sum(A, f: BlockFactorization) -> np.ndarray:
    """Map A to the m x m sum of its n diagonal blocks."""
    return np.ascontiguousarray(np.einsum("kakb->ab", _blocks(A, f)))


def portrait_pair(A, f: BlockFactorization) -> PortraitPair:
    """Both block-structure images of A under the factorization f."""
    R = _blocks(A, f)
    return PortraitPair(np.einsum("jaka->jk", R), np.einsum("kakb->ab", R))


def embed(A, spec: EmbeddingSpec) -> np.ndarray:
    """Place A inside a larger all-zero matrix at the given diagonal offset.

    The trace is unchanged; the extra dimensions contribute exact zeros.
    """
    A = require_square(A)
    N = A.shape[0]
    if spec.offset + N > spec.target_dim:
        raise SpecTooSmallError(
            f"cannot place a {N}x{N} matrix at offset {spec.offset} "
            f"inside dimension {spec.target_dim}"
        )
    out = np.zeros((spec.target_dim, spec.target_dim), dtype=np.complex128)
    out[spec.offset : spec.offset + N, spec.offset : spec.offset + N] = A
    return out


def shift(A, x: float) -> np.ndarray:
    """Add x times the identity. For Hermitian A and x >= |min eigenvalue| the result is PSD."""
    A = require_square(A)
    return A + float(x) * np.eye(A.shape[0], dtype=np.complex128)


def chain_portrait(A, c: ChainFactorization) -> np.ndarray:
    """Generalized image over a mixed-radix index: sum out every factor not in ``keep``.

    For two radices, keep={1} reproduces block_trace_map and keep={2} reproduces
    diagonal_block_sum. Kept factors retain their original order.
    """
    A = require_square(A)
    M = len(c.radices)
    if A.shape[0] != c.dim:
        raise DimensionMismatchError(
            f"matrix dimension {A.shape[0]} is not the product of radices {c.radices}"
        )
    letters = string.ascii_letters
    if 2 * M > len(letters):
        raise DimensionMismatchError(f"too many factors ({M})")
    row = [letters[i] for i in range(M)]
    col = [row[i] if (i + 1) not in c.keep else letters[M + i] for i in range(M)]
    kept = sorted(c.keep)
    out = "".join(row[k - 1] for k in kept) + "".join(col[k - 1] for k in kept)
    subscript = "".join(row) + "".join(col) + "->" + out
    tensor = A.reshape(c.radices + c.radices)
    result = np.einsum(subscript, tensor)
    d = prod(c.radices[k - 1] for k in kept)
    return np.ascontiguousarray(result.reshape(d, d))
