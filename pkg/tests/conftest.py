import json
import sys

import numpy as np
import pytest


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Repeat the acceptance verdict lines where they survive output capture."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "_VERDICTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture
def bell4():
    """Projector onto (|00> + |11>)/sqrt(2) as a plain 4x4 array."""
    psi = np.zeros(4, dtype=np.complex128)
    psi[0] = psi[3] = 1.0 / np.sqrt(2.0)
    return np.outer(psi, psi.conj())


@pytest.fixture
def matrix_file(tmp_path):
    """Writer that drops a matrix into a MatrixFile-format JSON and returns the path."""

    def _write(A, name="input.json"):
        A = np.asarray(A, dtype=np.complex128)
        payload = {
            "dim": A.shape[0],
            "entries": [
                [[float(A[i, j].real), float(A[i, j].imag)] for j in range(A.shape[1])]
                for i in range(A.shape[0])
            ],
        }
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    return _write
