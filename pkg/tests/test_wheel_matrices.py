from fractions import Fraction

import pytest

from tests.golden_w6 import L, M, N, Q
from wheelpinv.circulant import Circulant
from wheelpinv.dense import DenseMatrix
from wheelpinv.oracle import rank
from wheelpinv.wheel_matrices import (
    WheelSizeError,
    WheelSpec,
    build,
    build_incidence,
    build_laplacian,
    build_oriented_incidence,
    build_signless_laplacian,
    degree_matrix,
)


def block_form(n, sign, c):
    k = n - 1
    top = DenseMatrix.block([[DenseMatrix.ones(1, k), DenseMatrix.zeros(1, k)]])
    bottom = DenseMatrix.block([[DenseMatrix.identity(k).scale(sign), c.realize()]])
    return DenseMatrix.block([[top], [bottom]])


def test_w6_matrices_match_print():
    assert build_incidence(6) == DenseMatrix(M)
    assert build_oriented_incidence(6) == DenseMatrix(N)
    assert build_signless_laplacian(6) == DenseMatrix(Q)
    assert build_laplacian(6) == DenseMatrix(L)


@pytest.mark.parametrize("n", range(4, 13))
def test_incidence_block_layout(n):
    m = build_incidence(n)
    assert m.shape == (n, 2 * n - 2)
    assert m == block_form(n, 1, Circulant.tridiagonal(1, 0, 1, n - 1))
    assert all(s == 2 for s in m.column_sums())
    assert m.row_sums() == (n - 1,) + (3,) * (n - 1)


def test_incidence_n4_rim_block():
    m = build_incidence(4)
    assert m.shape == (4, 6)
    assert m[1:, 3:] == Circulant.of(1, 0, 1).realize()


@pytest.mark.parametrize("n", range(4, 13))
def test_oriented_layout(n):
    nn = build_oriented_incidence(n)
    assert nn == block_form(n, -1, Circulant.tridiagonal(1, 0, -1, n - 1))
    for j in range(nn.cols):
        col = sorted(nn.column(j))
        assert col[0] == -1 and col[-1] == 1 and col.count(0) == n - 2
    assert nn.map(abs) == build_incidence(n)


@pytest.mark.parametrize("n", range(4, 17))
def test_gram_identities(n):
    m, nn = build_incidence(n), build_oriented_incidence(n)
    q, lap = build_signless_laplacian(n), build_laplacian(n)
    assert q == m @ m.T
    assert lap == nn @ nn.T
    assert q.is_symmetric() and lap.is_symmetric()
    assert all(s == 0 for s in lap.row_sums())
    assert lap + q == degree_matrix(n).scale(2)
    assert [q[i, i] for i in range(n)] == [n - 1] + [3] * (n - 1)
    assert q[1:, 1:] == Circulant.tridiagonal(3, 1, 1, n - 1).realize()
    assert lap[1:, 1:] == Circulant.tridiagonal(3, -1, -1, n - 1).realize()


def test_ranks():
    for n in (4, 6, 9):
        assert rank(build_incidence(n)) == n
        assert rank(build_oriented_incidence(n)) == n - 1
        assert rank(build_laplacian(n)) == n - 1
        assert rank(build_signless_laplacian(n)) == n


def test_small_n_rejected():
    for fn in (build_incidence, build_oriented_incidence, build_signless_laplacian, build_laplacian):
        with pytest.raises(WheelSizeError):
            fn(3)
    with pytest.raises(ValueError):
        build("petersen", 6)


def test_edge_labels():
    assert WheelSpec(6).edges() == [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                                    (1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]
    assert build_oriented_incidence(6)[:, 9].entries == tuple(map(Fraction, (0, -1, 0, 0, 0, 1)))
