"""Seeded random matrix ensembles for tests and sweeps.

Every operation is a pure function of (seed, stream, parameters): it derives a
fresh PCG64 stream and draws Gaussians through the Box-Muller polar transform of
uniform doubles, so no rejection step can desynchronize sequences.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import HermitianMatrix, ValidationLevel, validate_hermitian
from .portrait import BlockFactorization


@dataclass(frozen=True)
class SeededGenerator:
    """A reproducible randomness source identified by (seed, stream)."""

    seed: int
    stream: int = 0

    def substream(self, index: int) -> "SeededGenerator":
        """A sibling source for worker or trial fan-out; index offsets the stream id."""
        return SeededGenerator(self.seed, self.stream + int(index))


def _rng(gen: SeededGenerator) -> np.random.Generator:
    seq = np.random.SeedSequence(int(gen.seed), spawn_key=(int(gen.stream),))
    return np.random.Generator(np.random.PCG64(seq))


def _complex_gaussians(rng: np.random.Generator, shape) -> np.ndarray:
    """Standard complex Gaussians (unit-variance real and imaginary parts)."""
    u1 = rng.random(shape)
    u2 = rng.random(shape)
    radius = np.sqrt(-2.0 * np.log1p(-u1))
    return radius * np.exp(2j * np.pi * u2)


def _ginibre(rng: np.random.Generator, dim: int) -> np.ndarray:
    return _complex_gaussians(rng, (dim, dim))


def _mixed_density(rng: np.random.Generator, dim: int) -> np.ndarray:
    G = _ginibre(rng, dim)
    W = G @ G.conj().T
    return W / np.trace(W).real


def haar_unitary(gen: SeededGenerator, dim: int) -> np.ndarray:
    """A Haar-distributed unitary: QR of a Ginibre sample with the R diagonal's
    phases folded back into Q."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    Q, R = np.linalg.qr(_ginibre(_rng(gen), dim))
    d = np.where(np.diagonal(R) == 0.0, 1.0, np.diagonal(R))
    return Q * (d / np.abs(d))


def random_pure_density(gen: SeededGenerator, dim: int) -> HermitianMatrix:
    """Rank-one projector onto a normalized complex-Gaussian vector."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    psi = _complex_gaussians(_rng(gen), (dim,))
    psi = psi / np.linalg.norm(psi)
    return validate_hermitian(np.outer(psi, psi.conj()), ValidationLevel.DENSITY)


def random_mixed_density(gen: SeededGenerator, dim: int) -> HermitianMatrix:
    """Hilbert-Schmidt-distributed density matrix: a normalized square-Ginibre product."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return validate_hermitian(_mixed_density(_rng(gen), dim), ValidationLevel.DENSITY)


def random_hermitian(gen: SeededGenerator, dim: int, scale: float = 1.0) -> HermitianMatrix:
    """Generally indefinite Hermitian sample: the Hermitian part of a Ginibre matrix."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    if scale <= 0:
        raise ValueError(f"scale must be positive, got {scale}")
    G = _ginibre(_rng(gen), dim)
    return validate_hermitian(scale * 0.5 * (G + G.conj().T), ValidationLevel.HERMITIAN)


def random_separable(gen: SeededGenerator, f: BlockFactorization, terms: int) -> HermitianMatrix:
    """Convex sum of ``terms`` tensor products of mixed densities of dimensions n and m.

    Weights come from normalized exponentials, i.e. a flat Dirichlet sample.
    """
    if terms < 1:
        raise ValueError(f"need at least one term, got {terms}")
    rng = _rng(gen)
    weights = -np.log1p(-rng.random(terms))
    weights = weights / weights.sum()
    total = np.zeros((f.dim, f.dim), dtype=np.complex128)
    for p in weights:
        total += p * np.kron(_mixed_density(rng, f.n), _mixed_density(rng, f.m))
    return validate_hermitian(total, ValidationLevel.DENSITY)
