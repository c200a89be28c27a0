"""Request and response models for the HTTP service."""

from __future__ import annotations

import math
from typing import Literal, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..inequalities import DEFAULT_SLACK_TOL

CheckKind = Literal["subadd", "scaled", "shifted", "ssa"]
GenKind = Literal["pure", "mixed", "hermitian", "separable", "unitary"]


class StrictModel(BaseModel):
    model_config = ConfigDict(extra="forbid")


class MatrixPayload(StrictModel):
    """Square complex matrix as rows of [re, im] pairs."""

    dim: int = Field(ge=1)
    entries: list[list[list[float]]]

    @model_validator(mode="after")
    def _check_shape(self) -> "MatrixPayload":
        if len(self.entries) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.entries)}")
        for i, row in enumerate(self.entries):
            if len(row) != self.dim:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.dim}")
            for j, pair in enumerate(row):
                if len(pair) != 2:
                    raise ValueError(f"entry ({i}, {j}) must be a [re, im] pair")
                if not (math.isfinite(pair[0]) and math.isfinite(pair[1])):
                    raise ValueError(f"entry ({i}, {j}) is not finite")
        return self

    @classmethod
    def from_array(cls, A) -> "MatrixPayload":
        A = np.asarray(A, dtype=np.complex128)
        dim = int(A.shape[0])
        entries = [
            [[float(A[i, j].real), float(A[i, j].imag)] for j in range(dim)]
            for i in range(dim)
        ]
        return cls(dim=dim, entries=entries)

    def to_array(self) -> np.ndarray:
        out = np.empty((self.dim, self.dim), dtype=np.complex128)
        for i, row in enumerate(self.entries):
            for j, (re, im) in enumerate(row):
                out[i, j] = complex(re, im)
        return out


class OracleCheck(StrictModel):
    """Result of re-running a computation through the reference implementations."""

    max_error: float
    tolerance: float
    ok: bool


class PortraitRequest(StrictModel):
    matrix: MatrixPayload
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    pad_to: Optional[int] = Field(default=None, ge=1)
    offset: int = Field(default=0, ge=0)
    verify_oracle: bool = False


class PortraitResponse(StrictModel):
    left: MatrixPayload
    right: MatrixPayload
    oracle: Optional[OracleCheck] = None


class CheckRequest(StrictModel):
    matrix: MatrixPayload
    kind: CheckKind
    n: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    radices: Optional[list[int]] = None
    pad_to: Optional[int] = Field(default=None, ge=1)
    offset: int = Field(default=0, ge=0)
    x: Optional[float] = None
    tol: float = DEFAULT_SLACK_TOL
    verify_oracle: bool = False


class CheckResponse(StrictModel):
    inequality: str
    lhs: float
    rhs: float
    slack: float
    tolerance: float
    satisfied: bool
    terms: dict[str, float]
    oracle: Optional[OracleCheck] = None


class MutinfoRequest(StrictModel):
    matrix: MatrixPayload
    n: int = Field(ge=1)
    m: int = Field(ge=1)
    verify_oracle: bool = False


class MutinfoResponse(StrictModel):
    value: float
    value_via_embedding: float
    terms: dict[str, float]
    oracle: Optional[OracleCheck] = None


class GenRequest(StrictModel):
    kind: GenKind
    dim: int = Field(ge=1)
    seed: int
    stream: int = 0
    scale: float = Field(default=1.0, gt=0)
    terms: int = Field(default=4, ge=1)
    n: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)


class GenResponse(StrictModel):
    matrix: MatrixPayload


class BatchRequest(StrictModel):
    kind: CheckKind
    dims: list[int]
    trials: int = Field(ge=0)
    seed: int
    stream: int = 0
    tol: float = DEFAULT_SLACK_TOL
    n: Optional[int] = Field(default=None, ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    radices: Optional[list[int]] = None


class DimStats(StrictModel):
    dim: int
    trials: int
    violations: int
    min_slack: float
    mean_slack: float


class BatchResponse(StrictModel):
    inequality: str
    kind: CheckKind
    tolerance: float
    total_trials: int
    violations: int
    satisfied: bool
    min_slack: Optional[float] = None
    mean_slack: Optional[float] = None
    worst_lhs: Optional[float] = None
    worst_rhs: Optional[float] = None
    per_dim: list[DimStats] = Field(default_factory=list)
