"""Batch ensemble sweeps over the inequality checkers.

Each trial is keyed by a deterministic stream offset (two stream ids per trial:
one for the matrix draw, one for auxiliary scalars), so a sweep is a pure
function of (kind, dims, trials, seed, stream) and results merge in trial order
no matter how the work is scheduled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError
from .inequalities import (
    DEFAULT_SLACK_TOL,
    InequalityReport,
    check_scaled,
    check_shifted,
    check_ssa_analog,
    check_subadditivity,
)
from .linalg import min_eigenvalue
from .portrait import BlockFactorization, EmbeddingSpec
from .randgen import SeededGenerator, _rng, random_hermitian, random_mixed_density

BATCH_KINDS = ("subadd", "scaled", "shifted", "ssa")


def balanced_factorization(dim: int) -> BlockFactorization:
    """The most square n*m splitting of dim, with n <= m."""
    if dim < 1:
        raise DimensionMismatchError(f"dimension must be positive, got {dim}")
    n = 1
    for d in range(1, math.isqrt(dim) + 1):
        if dim % d == 0:
            n = d
    return BlockFactorization(n, dim // n)


def smallest_composite_target(dim: int) -> int:
    """Smallest T >= max(dim, 4) admitting a block splitting with both sides >= 2."""
    t = max(dim, 4)
    while balanced_factorization(t).n < 2:
        t += 1
    return t


def default_radices(dim: int) -> tuple[int, int, int]:
    """A three-factor splitting of dim with every factor >= 2."""
    for a in range(2, dim + 1):
        if dim % a:
            continue
        rest = dim // a
        for b in range(2, rest + 1):
            if rest % b:
                continue
            if rest // b >= 2:
                return (a, b, rest // b)
    raise DimensionMismatchError(f"{dim} has no three-factor splitting with factors >= 2")


@dataclass(frozen=True)
class DimSummary:
    dim: int
    trials: int
    violations: int
    min_slack: float
    mean_slack: float


@dataclass(frozen=True)
class BatchSummary:
    kind: str
    tolerance: float
    total_trials: int
    violations: int
    min_slack: float | None
    mean_slack: float | None
    worst_lhs: float | None
    worst_rhs: float | None
    per_dim: tuple[DimSummary, ...]

    @property
    def satisfied(self) -> bool:
        return self.violations == 0


def _trial_report(
    kind: str,
    dim: int,
    gen: SeededGenerator,
    aux: SeededGenerator,
    tol: float,
    n: int | None,
    m: int | None,
    radices,
) -> InequalityReport:
    if n is not None and m is not None:
        if n * m != dim:
            raise DimensionMismatchError(f"--n {n} and --m {m} do not factor dimension {dim}")
        f = BlockFactorization(n, m)
    else:
        f = balanced_factorization(dim)
    if kind == "subadd":
        return check_subadditivity(random_mixed_density(gen, dim), f, tol=tol)
    if kind == "scaled":
        mu = 0.1 + 9.9 * float(_rng(aux).random())
        rho = random_mixed_density(gen, dim).matrix
        return check_scaled(mu * rho, f, tol=tol)
    if kind == "shifted":
        A = random_hermitian(gen, dim).matrix
        target = smallest_composite_target(dim)
        tf = BlockFactorization(n, m) if (n is not None and m is not None and n * m == target) \
            else balanced_factorization(target)
        x = abs(min_eigenvalue(A)) + float(_rng(aux).random())
        return check_shifted(A, EmbeddingSpec(target, 0), tf, x, tol=tol)
    if kind == "ssa":
        r = tuple(int(v) for v in radices) if radices else default_radices(dim)
        if r[0] * r[1] * r[2] != dim:
            raise DimensionMismatchError(f"radices {r} do not factor dimension {dim}")
        return check_ssa_analog(random_mixed_density(gen, dim), r, tol=tol)
    raise ValueError(f"unknown batch kind {kind!r}; expected one of {BATCH_KINDS}")


def run_batch(
    kind: str,
    dims,
    trials: int,
    seed: int,
    stream: int = 0,
    tol: float = DEFAULT_SLACK_TOL,
    n: int | None = None,
    m: int | None = None,
    radices=None,
) -> BatchSummary:
    """Run `trials` random checks per dimension and aggregate slack statistics."""
    if kind not in BATCH_KINDS:
        raise ValueError(f"unknown batch kind {kind!r}; expected one of {BATCH_KINDS}")
    dims = [int(d) for d in dims]
    if trials < 0:
        raise ValueError(f"trials must be non-negative, got {trials}")
    if any(d < 1 for d in dims):
        raise ValueError(f"dimensions must be positive, got {dims}")
    base = SeededGenerator(int(seed), int(stream))
    summaries: list[DimSummary] = []
    all_slacks: list[float] = []
    worst: InequalityReport | None = None
    if trials > 0:
        for di, dim in enumerate(dims):
            slacks = []
            for t in range(trials):
                key = 2 * (di * trials + t)
                report = _trial_report(
                    kind, dim, base.substream(key), base.substream(key + 1),
                    tol, n, m, radices,
                )
                slacks.append(report.slack)
                if worst is None or report.slack < worst.slack:
                    worst = report
            violations = sum(1 for s in slacks if s < -tol)
            summaries.append(DimSummary(
                dim=dim,
                trials=trials,
                violations=violations,
                min_slack=float(np.min(slacks)),
                mean_slack=float(np.mean(slacks)),
            ))
            all_slacks.extend(slacks)
    total = len(all_slacks)
    return BatchSummary(
        kind=kind,
        tolerance=float(tol),
        total_trials=total,
        violations=sum(s.violations for s in summaries),
        min_slack=float(np.min(all_slacks)) if total else None,
        mean_slack=float(np.mean(all_slacks)) if total else None,
        worst_lhs=None if worst is None else worst.lhs,
        worst_rhs=None if worst is None else worst.rhs,
        per_dim=tuple(summaries),
    )
