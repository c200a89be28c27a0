import numpy as np
import pytest

from matportrait.entropy import mutual_matrix_information
from matportrait.linalg import ValidationLevel, min_eigenvalue
from matportrait.portrait import BlockFactorization
from matportrait.randgen import (
    SeededGenerator,
    haar_unitary,
    random_hermitian,
    random_mixed_density,
    random_pure_density,
    random_separable,
)


def test_same_seed_and_stream_bitwise_identical():
    a = random_mixed_density(SeededGenerator(42, 3), 6).matrix
    b = random_mixed_density(SeededGenerator(42, 3), 6).matrix
    assert np.array_equal(a, b)
    u = haar_unitary(SeededGenerator(42, 0), 5)
    v = haar_unitary(SeededGenerator(42, 0), 5)
    assert np.array_equal(u, v)


def test_streams_decorrelate():
    a = random_hermitian(SeededGenerator(7, 0), 4).matrix
    b = random_hermitian(SeededGenerator(7, 1), 4).matrix
    assert not np.allclose(a, b)


def test_substream_offsets_the_stream():
    base = SeededGenerator(11, 5)
    assert base.substream(3) == SeededGenerator(11, 8)
    direct = random_pure_density(SeededGenerator(11, 8), 3).matrix
    via = random_pure_density(base.substream(3), 3).matrix
    assert np.array_equal(direct, via)


def test_haar_unitary_is_unitary():
    for dim in (2, 3, 7, 16):
        U = haar_unitary(SeededGenerator(1, dim), dim)
        err = np.max(np.abs(U.conj().T @ U - np.eye(dim)))
        assert err <= 1e-11


def test_haar_unitary_dim_one_is_a_phase():
    U = haar_unitary(SeededGenerator(9, 0), 1)
    assert U.shape == (1, 1)
    assert abs(abs(U[0, 0]) - 1.0) <= 1e-12


def test_pure_density_is_rank_one():
    rho = random_pure_density(SeededGenerator(5, 0), 6).matrix
    w = np.sort(np.linalg.eigvalsh(rho))
    assert abs(w[-1] - 1.0) <= 1e-10
    assert np.all(np.abs(w[:-1]) <= 1e-10)
    # purity: trace of the square equals one for a projector
    assert np.trace(rho @ rho).real == pytest.approx(1.0, abs=1e-10)


def test_pure_density_dim_one():
    rho = random_pure_density(SeededGenerator(5, 1), 1).matrix
    assert rho[0, 0] == pytest.approx(1.0, abs=1e-12)


def test_mixed_density_is_a_density():
    for k in range(20):
        out = random_mixed_density(SeededGenerator(6, k), 5)
        assert out.level == ValidationLevel.DENSITY
        rho = out.matrix
        assert abs(np.trace(rho).real - 1.0) <= 1e-12
        assert min_eigenvalue(rho) >= -1e-12


def test_hermitian_sample_is_hermitian_and_often_indefinite():
    indefinite = 0
    for k in range(50):
        H = random_hermitian(SeededGenerator(8, k), 6, scale=2.0).matrix
        assert np.max(np.abs(H - H.conj().T)) <= 1e-14
        w = np.linalg.eigvalsh(H)
        if w[0] < 0 < w[-1]:
            indefinite += 1
    assert indefinite > 45


def test_hermitian_rejects_bad_arguments():
    with pytest.raises(ValueError):
        random_hermitian(SeededGenerator(0, 0), 4, scale=0.0)
    with pytest.raises(ValueError):
        random_hermitian(SeededGenerator(0, 0), 0)
    with pytest.raises(ValueError):
        random_pure_density(SeededGenerator(0, 0), 0)
    with pytest.raises(ValueError):
        random_mixed_density(SeededGenerator(0, 0), -2)


def test_separable_single_term_is_a_product():
    f = BlockFactorization(2, 3)
    rho = random_separable(SeededGenerator(12, 0), f, terms=1).matrix
    info = mutual_matrix_information(rho, f)
    assert abs(info.value) <= 1e-10


def test_separable_is_a_density():
    f = BlockFactorization(3, 2)
    for k in range(10):
        out = random_separable(SeededGenerator(13, k), f, terms=4)
        assert out.level == ValidationLevel.DENSITY
        assert abs(np.trace(out.matrix).real - 1.0) <= 1e-12
        assert min_eigenvalue(out.matrix) >= -1e-12


def test_separable_rejects_zero_terms():
    with pytest.raises(ValueError):
        random_separable(SeededGenerator(0, 0), BlockFactorization(2, 2), terms=0)
