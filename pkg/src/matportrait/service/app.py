"""HTTP service exposing the portrait and inequality toolkit.

Endpoints accept and return JSON matrices (rows of [re, im] pairs). Domain
errors surface as 422 responses with a one-line detail message; everything the
command-line client does goes through these routes.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import oracle
from ..entropy import (
    mutual_information_via_embedding,
    mutual_matrix_information,
    von_neumann_entropy,
)
from ..errors import PortraitError
from ..inequalities import (
    INEQUALITY_NAMES,
    InequalityReport,
    check_padded_subadditivity,
    check_scaled,
    check_shifted,
    check_ssa_analog,
    check_subadditivity,
)
from ..linalg import _coerce_hermitian, min_eigenvalue
from ..portrait import (
    BlockFactorization,
    ChainFactorization,
    EmbeddingSpec,
    chain_portrait,
    embed,
    portrait_pair,
    shift,
)
from ..randgen import (
    SeededGenerator,
    haar_unitary,
    random_hermitian,
    random_mixed_density,
    random_pure_density,
    random_separable,
)
from ..sweeps import (
    balanced_factorization,
    default_radices,
    run_batch,
    smallest_composite_target,
)
from .schemas import (
    BatchRequest,
    BatchResponse,
    CheckRequest,
    CheckResponse,
    DimStats,
    GenRequest,
    GenResponse,
    MatrixPayload,
    MutinfoRequest,
    MutinfoResponse,
    OracleCheck,
    PortraitRequest,
    PortraitResponse,
)

app = FastAPI(title="matportrait", version="1.0.0")


@app.exception_handler(PortraitError)
async def _portrait_error(request: Request, exc: PortraitError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.exception_handler(ValueError)
async def _value_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


def _entry_error(computed, reference) -> float:
    return float(np.max(np.abs(np.asarray(computed) - np.asarray(reference)))) if np.asarray(computed).size else 0.0


def _oracle_check(err: float) -> OracleCheck:
    err = float(err)
    return OracleCheck(max_error=err, tolerance=oracle.AGREEMENT_TOL, ok=bool(err <= oracle.AGREEMENT_TOL))


def _oracle_portrait_check(A, f: BlockFactorization, pair) -> OracleCheck:
    ref = oracle.oracle_portrait(A, f)
    return _oracle_check(max(_entry_error(pair.left, ref.left), _entry_error(pair.right, ref.right)))


def _merge(*checks: OracleCheck) -> OracleCheck:
    return _oracle_check(max(c.max_error for c in checks))


def _entropy_error(matrices) -> float:
    """Worst disagreement between the main entropy path and the reference path."""
    worst = 0.0
    for M in matrices:
        worst = max(worst, abs(von_neumann_entropy(M) - oracle.oracle_entropy(M)))
    return worst


@app.post("/portrait", response_model=PortraitResponse)
def portrait_endpoint(req: PortraitRequest) -> PortraitResponse:
    A = req.matrix.to_array()
    if req.pad_to is not None:
        A = embed(A, EmbeddingSpec(req.pad_to, req.offset))
    f = BlockFactorization(req.n, req.m)
    pair = portrait_pair(A, f)
    check = _oracle_portrait_check(A, f, pair) if req.verify_oracle else None
    return PortraitResponse(
        left=MatrixPayload.from_array(pair.left),
        right=MatrixPayload.from_array(pair.right),
        oracle=check,
    )


def _factorization(req, dim: int) -> BlockFactorization:
    if req.n is not None and req.m is not None:
        return BlockFactorization(req.n, req.m)
    if req.n is not None or req.m is not None:
        raise ValueError("provide both n and m, or neither")
    return balanced_factorization(dim)


def _check_oracle(kind: str, A, req, report: InequalityReport) -> OracleCheck:
    """Re-run the portraits and entropies behind a report through the oracle."""
    if kind == "ssa":
        r = tuple(req.radices) if req.radices else default_radices(A.shape[0])
        coarse = oracle.oracle_portrait(A, BlockFactorization(r[0] * r[1], r[2]))
        fine = oracle.oracle_portrait(A, BlockFactorization(r[0], r[1] * r[2]))
        mid_ref = oracle.oracle_portrait(coarse.left, BlockFactorization(r[0], r[1])).right
        mid = chain_portrait(A, ChainFactorization(r, {2}))
        first_pair = chain_portrait(A, ChainFactorization(r, {1, 2}))
        last_pair = chain_portrait(A, ChainFactorization(r, {2, 3}))
        portrait_err = max(
            _entry_error(mid, mid_ref),
            _entry_error(first_pair, coarse.left),
            _entry_error(last_pair, fine.right),
        )
        entropy_err = _entropy_error([A, mid, first_pair, last_pair])
        return _oracle_check(max(portrait_err, entropy_err))
    if kind == "shifted":
        spec, f, x = _shifted_geometry(req, A)
        working = shift(embed(_coerce_hermitian(A), spec), x)
    elif kind == "subadd" and req.pad_to is not None:
        spec = EmbeddingSpec(req.pad_to, req.offset)
        f = _factorization(req, req.pad_to)
        working = embed(req.matrix.to_array(), spec)
    else:
        f = _factorization(req, A.shape[0])
        working = A
    pair = portrait_pair(working, f)
    check = _oracle_portrait_check(working, f, pair)
    return _merge(check, _oracle_check(_entropy_error([working, pair.left, pair.right])))


def _shifted_geometry(req, A) -> tuple[EmbeddingSpec, BlockFactorization, float]:
    dim = A.shape[0]
    target = req.pad_to if req.pad_to is not None else smallest_composite_target(dim)
    spec = EmbeddingSpec(target, req.offset)
    if req.n is not None and req.m is not None:
        f = BlockFactorization(req.n, req.m)
    else:
        f = balanced_factorization(target)
    if req.x is not None:
        x = float(req.x)
    else:
        x = max(0.0, -min_eigenvalue(embed(_coerce_hermitian(A), spec)))
    return spec, f, x


@app.post("/check", response_model=CheckResponse)
def check_endpoint(req: CheckRequest) -> CheckResponse:
    A = req.matrix.to_array()
    kind = req.kind
    if kind == "subadd":
        if req.pad_to is not None:
            spec = EmbeddingSpec(req.pad_to, req.offset)
            report = check_padded_subadditivity(A, spec, _factorization(req, req.pad_to), tol=req.tol)
        else:
            report = check_subadditivity(A, _factorization(req, A.shape[0]), tol=req.tol)
    elif kind == "scaled":
        report = check_scaled(A, _factorization(req, A.shape[0]), tol=req.tol)
    elif kind == "shifted":
        spec, f, x = _shifted_geometry(req, A)
        report = check_shifted(A, spec, f, x, tol=req.tol)
    else:
        radices = tuple(req.radices) if req.radices else default_radices(A.shape[0])
        report = check_ssa_analog(A, radices, tol=req.tol)
    check = _check_oracle(kind, A, req, report) if req.verify_oracle else None
    return CheckResponse(
        inequality=INEQUALITY_NAMES[kind],
        lhs=report.lhs,
        rhs=report.rhs,
        slack=report.slack,
        tolerance=report.tolerance,
        satisfied=report.satisfied,
        terms=dict(report.terms),
        oracle=check,
    )


@app.post("/mutinfo", response_model=MutinfoResponse)
def mutinfo_endpoint(req: MutinfoRequest) -> MutinfoResponse:
    A = req.matrix.to_array()
    f = BlockFactorization(req.n, req.m)
    result = mutual_matrix_information(A, f)
    embedded = mutual_information_via_embedding(A, f)
    check = None
    if req.verify_oracle:
        pair = portrait_pair(np.asarray(A, dtype=np.complex128), f)
        portrait_check = _oracle_portrait_check(np.asarray(A, dtype=np.complex128), f, pair)
        ref = (oracle.oracle_entropy(pair.left) + oracle.oracle_entropy(pair.right)
               - oracle.oracle_entropy(A))
        check = _merge(portrait_check, _oracle_check(abs(result.value - ref)))
    return MutinfoResponse(
        value=result.value,
        value_via_embedding=embedded.value,
        terms={
            "entropy_joint": result.entropy_joint,
            "entropy_left": result.entropy_left,
            "entropy_right": result.entropy_right,
        },
        oracle=check,
    )


@app.post("/gen", response_model=GenResponse)
def gen_endpoint(req: GenRequest) -> GenResponse:
    gen = SeededGenerator(req.seed, req.stream)
    if req.kind == "pure":
        out = random_pure_density(gen, req.dim).matrix
    elif req.kind == "mixed":
        out = random_mixed_density(gen, req.dim).matrix
    elif req.kind == "hermitian":
        out = random_hermitian(gen, req.dim, scale=req.scale).matrix
    elif req.kind == "unitary":
        out = haar_unitary(gen, req.dim)
    else:
        if req.n is not None and req.m is not None:
            f = BlockFactorization(req.n, req.m)
            if f.dim != req.dim:
                raise ValueError(f"n*m = {f.dim} does not match dim {req.dim}")
        else:
            f = balanced_factorization(req.dim)
            if f.n < 2:
                raise ValueError(f"dim {req.dim} has no two-sided splitting for a separable draw")
        out = random_separable(gen, f, req.terms).matrix
    return GenResponse(matrix=MatrixPayload.from_array(out))


@app.post("/batch", response_model=BatchResponse)
def batch_endpoint(req: BatchRequest) -> BatchResponse:
    summary = run_batch(
        req.kind,
        req.dims,
        req.trials,
        req.seed,
        stream=req.stream,
        tol=req.tol,
        n=req.n,
        m=req.m,
        radices=req.radices,
    )
    return BatchResponse(
        inequality=INEQUALITY_NAMES[req.kind],
        kind=req.kind,
        tolerance=summary.tolerance,
        total_trials=summary.total_trials,
        violations=summary.violations,
        satisfied=summary.satisfied,
        min_slack=summary.min_slack,
        mean_slack=summary.mean_slack,
        worst_lhs=summary.worst_lhs,
        worst_rhs=summary.worst_rhs,
        per_dim=[
            DimStats(
                dim=s.dim,
                trials=s.trials,
                violations=s.violations,
                min_slack=s.min_slack,
                mean_slack=s.mean_slack,
            )
            for s in summary.per_dim
        ],
    )
