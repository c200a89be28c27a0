import hashlib
import json

import numpy as np
import pytest

from matportrait.errors import MatrixFileError
from matportrait.matrixio import (
    dumps_canonical,
    file_digest,
    matrix_to_payload,
    payload_to_matrix,
    read_matrix,
    text_digest,
    write_matrix,
)
from matportrait.randgen import SeededGenerator, random_hermitian


def test_round_trip_is_lossless(tmp_path):
    A = random_hermitian(SeededGenerator(17, 0), 5).matrix
    path = tmp_path / "a.json"
    write_matrix(path, A)
    B = read_matrix(path)
    assert np.array_equal(A, B)  # bit-exact, repr round-trips doubles


def test_round_trip_survives_awkward_floats(tmp_path):
    A = np.array(
        [
            [0.1 + 0.2j, 1e-308 + 0j],
            [np.nextafter(1.0, 2.0) - 1e300j, -0.0 + 0.3j],
        ]
    )
    path = tmp_path / "b.json"
    write_matrix(path, A)
    assert np.array_equal(read_matrix(path), A)


def test_canonical_bytes_are_stable(tmp_path):
    A = random_hermitian(SeededGenerator(18, 0), 3).matrix
    p1, p2 = tmp_path / "one.json", tmp_path / "two.json"
    write_matrix(p1, A)
    write_matrix(p2, A)
    assert p1.read_bytes() == p2.read_bytes()
    assert file_digest(p1) == file_digest(p2)


def test_canonical_form_sorts_keys_and_ends_with_newline():
    text = dumps_canonical({"b": 1, "a": 2})
    assert text == '{\n  "a": 2,\n  "b": 1\n}\n'


def test_payload_shape():
    payload = matrix_to_payload(np.array([[1.0 + 2.0j]]))
    assert payload == {"dim": 1, "entries": [[[1.0, 2.0]]]}


def test_payload_rejects_non_square():
    with pytest.raises(MatrixFileError):
        matrix_to_payload(np.zeros((2, 3)))


@pytest.mark.parametrize(
    "payload",
    [
        "not a dict",
        {"dim": 2},
        {"entries": [[[0.0, 0.0]]]},
        {"dim": 0, "entries": []},
        {"dim": True, "entries": [[[0.0, 0.0]]]},
        {"dim": 2, "entries": [[[0.0, 0.0], [0.0, 0.0]]]},
        {"dim": 1, "entries": [[[0.0]]]},
        {"dim": 1, "entries": [[[0.0, 0.0, 0.0]]]},
        {"dim": 1, "entries": [[["0", 0.0]]]},
        {"dim": 1, "entries": [[[True, 0.0]]]},
        {"dim": 1, "entries": [[0.0]]},
        {"dim": 1, "entries": [[[float("inf"), 0.0]]]},
        {"dim": 1, "entries": [[[float("nan"), 0.0]]]},
    ],
)
def test_payload_validation_rejects(payload):
    with pytest.raises(MatrixFileError):
        payload_to_matrix(payload)


def test_read_matrix_missing_file(tmp_path):
    with pytest.raises(MatrixFileError):
        read_matrix(tmp_path / "absent.json")


def test_read_matrix_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(MatrixFileError):
        read_matrix(path)


def test_read_matrix_accepts_integer_entries(tmp_path):
    path = tmp_path / "ints.json"
    path.write_text(json.dumps({"dim": 1, "entries": [[[1, 0]]]}), encoding="utf-8")
    assert read_matrix(path)[0, 0] == 1.0 + 0.0j


def test_digests_are_sha256():
    text = dumps_canonical({"x": 1.5})
    assert text_digest(text) == hashlib.sha256(text.encode("utf-8")).hexdigest()
    assert len(text_digest("")) == 64
