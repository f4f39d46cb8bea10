"""Exact linear algebra over small prime fields."""

import numpy as np
import pytest

from qci import (
    GuardError,
    PRIME_MAX,
    PrimeField,
    as_matrix,
    kernel_basis,
    left_kernel_basis,
    rank,
    rref,
)


def test_prime_field_accepts_primes():
    assert PrimeField(2).p == 2
    assert PrimeField(32003).p == 32003
    assert PrimeField(31013).p == 31013


def test_prime_field_rejects_bad_moduli():
    with pytest.raises(GuardError):
        PrimeField(1)
    with pytest.raises(GuardError):
        PrimeField(15)
    with pytest.raises(GuardError):
        PrimeField(32004)
    with pytest.raises(GuardError):
        PrimeField(True)
    with pytest.raises(GuardError):
        PrimeField(PRIME_MAX)


def test_prime_field_inverse(field):
    rng = np.random.default_rng(7)
    for a in rng.integers(1, field.p, size=40):
        assert field.mul(int(a), field.inv(int(a))) == 1
    with pytest.raises(ZeroDivisionError):
        field.inv(0)


def test_rank_zero_matrix(field):
    assert rank(np.zeros((3, 3), dtype=np.int64), field) == 0


def test_rank_identity(field):
    assert rank(np.eye(3, dtype=np.int64), field) == 3


def test_rank_proportional_rows(field):
    M = as_matrix([[1, 2, 3], [2, 4, 6]], field)
    assert rank(M, field) == 1


def test_rank_matches_transpose(field):
    rng = np.random.default_rng(11)
    for _ in range(25):
        m, n = rng.integers(1, 9, size=2)
        M = rng.integers(0, field.p, size=(int(m), int(n)))
        assert rank(M, field) == rank(M.T, field)


def test_rank_permutation_invariant(field):
    rng = np.random.default_rng(13)
    for _ in range(25):
        m, n = int(rng.integers(2, 9)), int(rng.integers(2, 9))
        M = rng.integers(0, field.p, size=(m, n))
        base = rank(M, field)
        assert rank(M[rng.permutation(m)], field) == base
        assert rank(M[:, rng.permutation(n)], field) == base


def test_kernel_of_injective_map_is_empty(field):
    K = kernel_basis(np.eye(2, dtype=np.int64), field)
    assert K.shape == (0, 2)


def test_kernel_of_row_of_ones(field):
    K = kernel_basis(as_matrix([[1, 1]], field), field)
    assert K.tolist() == [[1, field.p - 1]]


def test_kernel_vectors_annihilate(field):
    rng = np.random.default_rng(17)
    for _ in range(25):
        m, n = int(rng.integers(1, 8)), int(rng.integers(1, 8))
        M = rng.integers(0, field.p, size=(m, n))
        K = kernel_basis(M, field)
        assert rank(M, field) + K.shape[0] == n
        if K.shape[0]:
            assert not ((M @ K.T) % field.p).any()
            # basis rows are independent
            assert rank(K, field) == K.shape[0]


def test_left_kernel_annihilates_from_left(field):
    rng = np.random.default_rng(19)
    M = rng.integers(0, field.p, size=(6, 4))
    N = left_kernel_basis(M, field)
    assert N.shape[0] == 6 - rank(M, field)
    if N.shape[0]:
        assert not ((N @ M) % field.p).any()


def test_kernel_is_deterministic(field):
    rng = np.random.default_rng(23)
    M = rng.integers(0, field.p, size=(5, 9))
    K1 = kernel_basis(M, field)
    K2 = kernel_basis(M.copy(), field)
    assert np.array_equal(K1, K2)


def test_rref_reproduces_row_space(field):
    rng = np.random.default_rng(29)
    M = rng.integers(0, field.p, size=(5, 7))
    R, pivots = rref(M, field)
    assert len(pivots) == rank(M, field)
    stacked = np.vstack([M, R])
    assert rank(stacked, field) == rank(M, field)
    for row_idx, col in enumerate(pivots):
        column = R[:, col]
        assert column[row_idx] == 1
        assert not np.any(np.delete(column, row_idx))


def test_as_matrix_rejects_non_2d(field):
    with pytest.raises(ValueError):
        as_matrix([1, 2, 3], field)
