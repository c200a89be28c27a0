import json
import math
from pathlib import Path

import pytest
from click.testing import CliRunner

import matportrait.oracle
from matportrait.cli import main

GOLDEN = Path(__file__).resolve().parent / "golden"

BELL = str(GOLDEN / "bell4.json")
INDEFINITE = str(GOLDEN / "indefinite2.json")
MIXED4 = str(GOLDEN / "mixed4_seed123_stream7.json")


@pytest.fixture()
def runner():
    return CliRunner()


def _bytes(path) -> bytes:
    return Path(path).read_bytes()


def test_gen_reproduces_golden_bytes(runner, tmp_path):
    out = tmp_path / "m.json"
    result = runner.invoke(
        main,
        ["gen", "--kind", "mixed", "--dim", "4", "--seed", "123", "--stream", "7",
         "--out", str(out)],
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(MIXED4)


def test_gen_twice_is_byte_identical(runner, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for out in (a, b):
        result = runner.invoke(
            main,
            ["gen", "--kind", "unitary", "--dim", "5", "--seed", "9", "--stream", "1",
             "--out", str(out)],
        )
        assert result.exit_code == 0
    assert _bytes(a) == _bytes(b)


def test_gen_seed_envvar(runner, tmp_path):
    out = tmp_path / "env.json"
    result = runner.invoke(
        main,
        ["gen", "--kind", "mixed", "--dim", "4", "--stream", "7", "--out", str(out)],
        env={"MATPORTRAIT_SEED": "123"},
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(MIXED4)


def test_gen_different_stream_differs(runner, tmp_path):
    out = tmp_path / "other.json"
    result = runner.invoke(
        main,
        ["gen", "--kind", "mixed", "--dim", "4", "--seed", "123", "--stream", "8",
         "--out", str(out)],
    )
    assert result.exit_code == 0
    assert _bytes(out) != _bytes(MIXED4)


def test_portrait_matches_golden(runner, tmp_path):
    prefix = tmp_path / "bell"
    result = runner.invoke(
        main, ["portrait", BELL, "--n", "2", "--m", "2", "--out", str(prefix)]
    )
    assert result.exit_code == 0
    assert _bytes(f"{prefix}.left.json") == _bytes(GOLDEN / "portrait_bell.left.json")
    assert _bytes(f"{prefix}.right.json") == _bytes(GOLDEN / "portrait_bell.right.json")
    assert "wrote" in result.stderr


def test_portrait_verify_oracle_passes(runner, tmp_path):
    prefix = tmp_path / "bell"
    result = runner.invoke(
        main,
        ["portrait", BELL, "--n", "2", "--m", "2", "--verify-oracle", "--out", str(prefix)],
    )
    assert result.exit_code == 0


def test_check_subadd_report_golden(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        main,
        ["check", MIXED4, "--kind", "subadd", "--n", "2", "--m", "2", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(GOLDEN / "report_subadd_mixed4.json")
    assert "subadditivity: slack =" in result.stderr


def test_check_report_on_stdout_matches_file_bytes(runner, tmp_path):
    out = tmp_path / "report.json"
    to_file = runner.invoke(
        main, ["check", MIXED4, "--kind", "subadd", "--out", str(out)]
    )
    to_stdout = runner.invoke(main, ["check", MIXED4, "--kind", "subadd"])
    assert to_file.exit_code == 0 and to_stdout.exit_code == 0
    assert to_stdout.stdout.encode("utf-8") == _bytes(out)


def test_check_bits_golden(runner, tmp_path):
    out = tmp_path / "bits.json"
    result = runner.invoke(
        main, ["check", BELL, "--kind", "subadd", "--bits", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(GOLDEN / "report_subadd_bell_bits.json")
    report = json.loads(out.read_text())
    assert report["slack"] == 2.0  # exactly two bits for this state
    assert report["slack"] == report["rhs"] - report["lhs"]
    assert "bits" in result.stderr


def test_check_shifted_hand_golden(runner, tmp_path):
    out = tmp_path / "shifted.json"
    result = runner.invoke(
        main,
        ["check", INDEFINITE, "--kind", "shifted", "--n", "2", "--m", "2",
         "--pad-to", "4", "--x", "1.0", "--out", str(out)],
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(GOLDEN / "report_shifted_hand.json")
    report = json.loads(out.read_text())
    assert report["lhs"] == -2.0 * math.log(2.0)
    assert report["terms"]["grouped_lhs"] == pytest.approx(
        -2.0 * math.log(2.0) - 4.0 * math.log(4.0), abs=1e-12
    )


def test_check_shifted_default_x(runner, tmp_path):
    out = tmp_path / "barex.json"
    result = runner.invoke(
        main,
        ["check", INDEFINITE, "--kind", "shifted", "--pad-to", "4", "--out", str(out)],
    )
    assert result.exit_code == 0
    # the default shift is |min eigenvalue| = 1, reproducing the pinned report
    # except for the tolerance-independent fields matching the golden file
    assert _bytes(out) == _bytes(GOLDEN / "report_shifted_hand.json")


def test_check_ssa_ghz(runner, tmp_path, matrix_file):
    import numpy as np

    psi = np.zeros(8)
    psi[0] = psi[7] = 1.0 / math.sqrt(2.0)
    path = matrix_file(np.outer(psi, psi), "ghz.json")
    result = runner.invoke(
        main, ["check", str(path), "--kind", "ssa", "--radices", "2,2,2"]
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["slack"] == pytest.approx(math.log(2.0), abs=1e-9)


def test_check_violation_exit_code(runner):
    result = runner.invoke(main, ["check", BELL, "--kind", "subadd", "--tol=-2"])
    assert result.exit_code == 1
    assert "VIOLATED" in result.stderr


def test_check_verify_oracle_ok(runner):
    result = runner.invoke(
        main, ["check", BELL, "--kind", "subadd", "--verify-oracle"]
    )
    assert result.exit_code == 0


def test_check_oracle_disagreement_exit_code(runner, monkeypatch):
    monkeypatch.setattr(matportrait.oracle, "AGREEMENT_TOL", -1.0)
    result = runner.invoke(
        main, ["check", BELL, "--kind", "subadd", "--verify-oracle"]
    )
    assert result.exit_code == 3
    assert "oracle disagreement" in result.stderr


def test_check_missing_file_exit_code(runner):
    result = runner.invoke(main, ["check", "/nonexistent/m.json", "--kind", "subadd"])
    assert result.exit_code == 2
    assert result.stderr.startswith("error:")


def test_check_malformed_file_exit_code(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "entries": [[[0, 0]]]}')
    result = runner.invoke(main, ["check", str(bad), "--kind", "subadd"])
    assert result.exit_code == 2


def test_check_dimension_mismatch_exit_code(runner):
    result = runner.invoke(
        main, ["check", BELL, "--kind", "subadd", "--n", "2", "--m", "3"]
    )
    assert result.exit_code == 2


def test_check_bad_radices_exit_code(runner):
    result = runner.invoke(
        main, ["check", BELL, "--kind", "ssa", "--radices", "2,x,2"]
    )
    assert result.exit_code == 2


def test_check_non_density_exit_code(runner, tmp_path, matrix_file):
    import numpy as np

    path = matrix_file(np.eye(4), "eye.json")
    result = runner.invoke(main, ["check", str(path), "--kind", "subadd"])
    assert result.exit_code == 2


def test_mutinfo_golden(runner, tmp_path):
    out = tmp_path / "mi.json"
    result = runner.invoke(
        main, ["mutinfo", BELL, "--n", "2", "--m", "2", "--out", str(out)]
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(GOLDEN / "report_mutinfo_bell.json")
    report = json.loads(out.read_text())
    assert report["quantity"] == "mutual-information"
    assert report["value"] == pytest.approx(2.0 * math.log(2.0), abs=1e-10)
    assert abs(report["value"] - report["value_via_embedding"]) <= 1e-10


def test_mutinfo_bits(runner):
    result = runner.invoke(main, ["mutinfo", BELL, "--n", "2", "--m", "2", "--bits"])
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["value"] == pytest.approx(2.0, abs=1e-10)


def test_mutinfo_negative_tolerance_flags_violation(runner, tmp_path, matrix_file):
    import numpy as np

    path = matrix_file(np.kron(np.diag([0.25, 0.75]), np.eye(2) / 2.0), "prod.json")
    result = runner.invoke(main, ["mutinfo", str(path), "--n", "2", "--m", "2", "--tol=-1"])
    assert result.exit_code == 1


def test_batch_report_golden(runner, tmp_path):
    out = tmp_path / "batch.json"
    result = runner.invoke(
        main,
        ["batch", "--kind", "subadd", "--dims", "4,6", "--trials", "3", "--seed", "5",
         "--report", str(out)],
    )
    assert result.exit_code == 0
    assert _bytes(out) == _bytes(GOLDEN / "report_batch_subadd.json")
    assert "6 trials, 0 violations" in result.stderr


def test_batch_report_invariants(runner):
    result = runner.invoke(
        main, ["batch", "--kind", "ssa", "--dims", "8", "--trials", "2", "--seed", "1"]
    )
    assert result.exit_code == 0
    report = json.loads(result.stdout)
    assert report["slack"] == report["rhs"] - report["lhs"]
    assert report["terms"]["total_trials"] == 2.0
    assert "dim8_min_slack" in report["terms"]


def test_batch_bad_dims_exit_code(runner):
    result = runner.invoke(
        main, ["batch", "--kind", "subadd", "--dims", "4;6", "--trials", "1"]
    )
    assert result.exit_code == 2


def test_golden_inputs_regenerate_cleanly(tmp_path):
    """The committed inputs are exact binary fractions, so rewriting them
    reproduces the same bytes."""
    import numpy as np

    from matportrait.matrixio import write_matrix

    bell = np.zeros((4, 4))
    bell[0, 0] = bell[0, 3] = bell[3, 0] = bell[3, 3] = 0.5
    p = tmp_path / "bell4.json"
    write_matrix(p, bell)
    assert _bytes(p) == _bytes(BELL)
