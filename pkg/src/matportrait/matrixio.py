"""Reading and writing the on-disk matrix and report formats.

Matrices travel as JSON objects ``{"dim": N, "entries": [[[re, im], ...], ...]}``
with one [re, im] pair per entry. Serialization is canonical (sorted keys,
two-space indent, trailing newline) so identical data produces identical bytes,
and floats are written in shortest round-trip form, which keeps a
parse/serialize cycle lossless.
"""

from __future__ import annotations

import hashlib
import json
import math
from pathlib import Path

import numpy as np

from .errors import MatrixFileError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise MatrixFileError(message)


def _is_number(value) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def matrix_to_payload(A) -> dict:
    """JSON-ready dict for a square complex matrix."""
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise MatrixFileError(f"expected a square matrix, got shape {A.shape}")
    dim = int(A.shape[0])
    entries = [
        [[float(A[i, j].real), float(A[i, j].imag)] for j in range(dim)]
        for i in range(dim)
    ]
    return {"dim": dim, "entries": entries}


def payload_to_matrix(payload) -> np.ndarray:
    """Parse and validate a matrix payload, returning a complex array."""
    _require(isinstance(payload, dict), "matrix payload must be a JSON object")
    _require("dim" in payload and "entries" in payload, "matrix payload needs 'dim' and 'entries'")
    dim = payload["dim"]
    _require(isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
             f"'dim' must be a positive integer, got {dim!r}")
    entries = payload["entries"]
    _require(isinstance(entries, list) and len(entries) == dim,
             f"'entries' must be a list of {dim} rows")
    out = np.empty((dim, dim), dtype=np.complex128)
    for i, row in enumerate(entries):
        _require(isinstance(row, list) and len(row) == dim,
                 f"row {i} must be a list of {dim} [re, im] pairs")
        for j, pair in enumerate(row):
            _require(isinstance(pair, list) and len(pair) == 2
                     and _is_number(pair[0]) and _is_number(pair[1]),
                     f"entry ({i}, {j}) must be a [re, im] pair of numbers")
            re, im = float(pair[0]), float(pair[1])
            _require(math.isfinite(re) and math.isfinite(im),
                     f"entry ({i}, {j}) is not finite")
            out[i, j] = complex(re, im)
    return out


def dumps_canonical(obj) -> str:
    """Canonical JSON text: sorted keys, indented, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_json(path, obj) -> None:
    Path(path).write_text(dumps_canonical(obj), encoding="utf-8")


def read_matrix(path) -> np.ndarray:
    """Load a matrix file, raising MatrixFileError on any malformation."""
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"{path} is not valid JSON: {exc}") from exc
    return payload_to_matrix(payload)


def write_matrix(path, A) -> None:
    write_json(path, matrix_to_payload(A))


def file_digest(path) -> str:
    """Hex checksum of the file's raw bytes."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise MatrixFileError(f"cannot read {path}: {exc}") from exc
    return hashlib.sha256(data).hexdigest()


def text_digest(text: str) -> str:
    """Hex checksum of a string, for digests of non-file inputs."""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
