import numpy as np
import pytest

from gbs_page import haar_unitary


@pytest.mark.parametrize("n", [1, 2, 3, 5, 17, 64, 128, 512])
def test_unitarity(n):
    U = haar_unitary(n, master_seed=123, sample_index=0)
    assert np.abs(U.conj().T @ U - np.eye(n)).max() <= 1e-10


def test_dimension_one_is_a_phase():
    U = haar_unitary(1, master_seed=9, sample_index=4)
    assert abs(abs(U[0, 0]) - 1.0) <= 1e-12


def test_rejects_zero_modes():
    with pytest.raises(ValueError):
        haar_unitary(0, master_seed=1)
    with pytest.raises(ValueError):
        haar_unitary(3, master_seed=1, sample_index=-1)


def test_reproducible_bit_identical():
    a = haar_unitary(8, master_seed=77, sample_index=3)
    b = haar_unitary(8, master_seed=77, sample_index=3)
    assert np.array_equal(a, b)


def test_distinct_indices_and_seeds_differ():
    base = haar_unitary(6, master_seed=77, sample_index=0)
    assert not np.allclose(base, haar_unitary(6, master_seed=77, sample_index=1))
    assert not np.allclose(base, haar_unitary(6, master_seed=78, sample_index=0))


def test_first_moment_matches_haar():
    # E|U_ij|^2 = 1/n; Var|U_ij|^2 = 2/(n(n+1)) - 1/n^2.
    n, n_samples = 4, 20000
    acc = np.zeros((n, n))
    for idx in range(n_samples):
        acc += np.abs(haar_unitary(n, master_seed=2024, sample_index=idx)) ** 2
    mean = acc / n_samples
    var = 2.0 / (n * (n + 1)) - 1.0 / n**2
    se = np.sqrt(var / n_samples)
    for i, j in [(0, 0), (1, 2), (3, 3)]:
        assert abs(mean[i, j] - 1.0 / n) <= 3 * se
