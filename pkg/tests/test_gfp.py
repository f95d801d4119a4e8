import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from hookblock import gfp


def test_identity_rref_is_itself():
    R, r, piv = gfp.rref(gfp.identity(4), 5)
    assert np.array_equal(R, gfp.identity(4))
    assert r == 4 and piv == (0, 1, 2, 3)


def test_zero_matrix_has_rank_zero():
    assert gfp.rank(gfp.zeros(3, 5), 7) == 0
    R, r, piv = gfp.rref(gfp.zeros(2, 2), 3)
    assert r == 0 and not R.any()


def test_kernel_of_identity_is_trivial():
    assert gfp.kernel_basis(gfp.identity(3), 2).shape == (0, 3)


def test_rank_depends_on_characteristic():
    M = [[1, 1], [1, -1]]
    assert gfp.rank(M, 2) == 1
    assert gfp.rank(M, 3) == 2


def test_solve_inconsistent_returns_none():
    assert gfp.solve([[1, 0], [1, 0]], [1, 0], 5) is None


def test_solve_left_rejects_outside_span():
    with pytest.raises(gfp.ContainmentError):
        gfp.solve_left([[1, 0, 0]], [[0, 1, 0]], 3)


def test_solve_checks_lengths():
    with pytest.raises(gfp.DimensionError):
        gfp.solve([[1, 0]], [1, 0], 3)


def test_matmul_float_path_matches_integer_product():
    rng = np.random.default_rng(3)
    p = 10007
    A = rng.integers(0, p, (30, 40))
    B = rng.integers(0, p, (40, 20))
    exact = np.array([[sum(int(a) * int(b) for a, b in zip(row, col)) % p for col in B.T] for row in A])
    assert np.array_equal(gfp.matmul(A, B, p), exact)


def test_subspace_intersection_and_sum():
    p = 3
    U = gfp.Subspace([[1, 0, 0], [0, 1, 0]], 3, p)
    V = gfp.Subspace([[0, 1, 0], [0, 0, 1]], 3, p)
    assert U.intersect(V) == gfp.Subspace([[0, 1, 0]], 3, p)
    assert U.sum(V).dim == 3
    assert U.contains(gfp.Subspace([[1, 2, 0]], 3, p))


def test_quotient_map_has_expected_rank():
    p = 5
    W = gfp.Subspace(gfp.identity(4), 4, p)
    S = gfp.Subspace([[1, 1, 0, 0], [0, 0, 1, 1]], 4, p)
    Q = W.quotient_map(S)
    assert Q.shape == (2, 4)
    assert not gfp.matmul(Q, gfp.solve_left(W.basis, S.basis, p).T, p).any()


primes = st.sampled_from([2, 3, 5, 7])
matrices = st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(
    lambda s: arrays(np.int64, s, elements=st.integers(0, 6)))


@settings(max_examples=60, deadline=None)
@given(matrices, primes)
def test_rank_nullity(M, p):
    K = gfp.kernel_basis(M, p)
    assert gfp.rank(M, p) + K.shape[0] == M.shape[1]
    assert not gfp.matmul(M, K.T, p).any()


@settings(max_examples=60, deadline=None)
@given(matrices, primes, st.data())
def test_solve_round_trip(M, p, data):
    x = np.array(data.draw(st.lists(st.integers(0, p - 1), min_size=M.shape[1], max_size=M.shape[1])))
    b = gfp.matmul(M, x.reshape(-1, 1), p).reshape(-1)
    y = gfp.solve(M, b, p)
    assert y is not None
    assert np.array_equal(gfp.matmul(M, y.reshape(-1, 1), p).reshape(-1), b)


@settings(max_examples=40, deadline=None)
@given(matrices, primes)
def test_rank_of_transpose(M, p):
    assert gfp.rank(M, p) == gfp.rank(M.T, p)
