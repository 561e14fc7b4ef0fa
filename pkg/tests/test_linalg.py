"""Exact linear algebra: kernels, solving, Kronecker products."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopffactor.linalg import INCONSISTENT, Mat, kron, mat_kernel, mat_solve, vec
from hopffactor.scalar import Scalar


def rand_scalar(rng):
    return Scalar(rng.randint(-5, 5), rng.randint(1, 4),
                  rng.randint(-5, 5), rng.randint(1, 4))


def rand_mat(rng, m, n):
    return Mat([[rand_scalar(rng) for _ in range(n)] for _ in range(m)])


def naive_matmul(a, b):
    # independent of Mat.matmul: textbook triple loop
    out = []
    for i in range(a.nrows):
        row = []
        for j in range(b.ncols):
            acc = Scalar(0)
            for k in range(a.ncols):
                acc = acc + a.rows[i][k] * b.rows[k][j]
            row.append(acc)
        out.append(row)
    return Mat(out)


def test_kernel_zero_matrix():
    assert len(mat_kernel(Mat.zero(3, 3))) == 3


def test_kernel_identity():
    assert mat_kernel(Mat.identity(4)) == []


def test_kernel_vectors_annihilate():
    rng = random.Random(7)
    for _ in range(10):
        m = rand_mat(rng, 4, 6)
        basis = mat_kernel(m)
        for v in basis:
            assert all(c.is_zero() for c in m.apply(v))


def test_solve_identity():
    b = vec(1, 2, Scalar(1, 2))
    assert mat_solve(Mat.identity(3), b) == b


def test_solve_inconsistent():
    m = Mat([[1, 1], [1, 1]])
    assert mat_solve(m, vec(1, 0)) is INCONSISTENT


def test_solve_scalar_equation():
    assert mat_solve(Mat([[2]]), vec(1)) == vec(Scalar(1, 2))


def test_kron_identities():
    assert kron(Mat.identity(2), Mat.identity(2)) == Mat.identity(4)
    d = Mat.diag([Scalar(1), Scalar(-1)])
    assert kron(d, Mat.identity(2)) == Mat.diag(
        [Scalar(1), Scalar(1), Scalar(-1), Scalar(-1)]
    )


def test_kron_mixed_product():
    # kron(A,B) * kron(C,D) = kron(AC, BD), checked against a matmul oracle
    # written independently in this test
    rng = random.Random(12345)
    for _ in range(8):
        a, b = rand_mat(rng, 2, 2), rand_mat(rng, 2, 2)
        c, d = rand_mat(rng, 2, 2), rand_mat(rng, 2, 2)
        lhs = kron(a, b).matmul(kron(c, d))
        rhs = kron(naive_matmul(a, c), naive_matmul(b, d))
        assert lhs == rhs


def test_kron_associative():
    rng = random.Random(99)
    a, b, c = rand_mat(rng, 2, 2), rand_mat(rng, 2, 3), rand_mat(rng, 3, 2)
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=60, deadline=None)
@given(
    rows=st.integers(min_value=1, max_value=4),
    cols=st.integers(min_value=1, max_value=4),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_rank_nullity(rows, cols, seed):
    rng = random.Random(seed)
    m = rand_mat(rng, rows, cols)
    assert m.rank() + len(m.kernel()) == cols


@settings(max_examples=40, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=4),
    seed=st.integers(min_value=0, max_value=10_000),
)
def test_solve_agrees_with_substitution(n, seed):
    rng = random.Random(seed)
    m = rand_mat(rng, n, n)
    b = tuple(rand_scalar(rng) for _ in range(n))
    x = mat_solve(m, b)
    if x is INCONSISTENT:
        return
    assert m.apply(x) == b


def test_dimension_checks():
    with pytest.raises(ValueError):
        Mat([[1, 2], [3]])
    with pytest.raises(ValueError):
        Mat.identity(2).matmul(Mat.identity(3))
    with pytest.raises(ValueError):
        Mat.identity(2) + Mat.identity(3)
    with pytest.raises(ValueError):
        Mat.identity(2).apply(vec(1, 2, 3))


def test_scalar_multiplication():
    m = Mat([[1, 2], [3, 4]])
    assert (m * 2).rows[1][1] == Scalar(8)
    assert (Scalar(1, 2) * m).rows[0][0] == Scalar(1, 2)
