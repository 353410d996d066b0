"""Printed W6 matrices, as (prefactor denominator, integer rows)."""

M = [
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 1, 0, 0, 0, 1],
    [0, 1, 0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 1, 1],
]

N = [
    [1, 1, 1, 1, 1, 0, 0, 0, 0, 0],
    [-1, 0, 0, 0, 0, 1, 0, 0, 0, -1],
    [0, -1, 0, 0, 0, -1, 1, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, -1, 1, 0],
    [0, 0, 0, 0, -1, 0, 0, 0, -1, 1],
]

Q = [
    [5, 1, 1, 1, 1, 1],
    [1, 3, 1, 0, 0, 1],
    [1, 1, 3, 1, 0, 0],
    [1, 0, 1, 3, 1, 0],
    [1, 0, 0, 1, 3, 1],
    [1, 1, 0, 0, 1, 3],
]

L = [
    [5, -1, -1, -1, -1, -1],
    [-1, 3, -1, 0, 0, -1],
    [-1, -1, 3, -1, 0, 0],
    [-1, 0, -1, 3, -1, 0],
    [-1, 0, 0, -1, 3, -1],
    [-1, -1, 0, 0, -1, 3],
]

M_PINV = (10, [
    [2, 4, -2, 0, 0, -2],
    [2, -2, 4, -2, 0, 0],
    [2, 0, -2, 4, -2, 0],
    [2, 0, 0, -2, 4, -2],
    [2, -2, 0, 0, -2, 4],
    [-1, 3, 3, -1, 1, -1],
    [-1, -1, 3, 3, -1, 1],
    [-1, 1, -1, 3, 3, -1],
    [-1, -1, 1, -1, 3, 3],
    [-1, 3, -1, 1, -1, 3],
])

Q_PINV = (20, [
    [5, -1, -1, -1, -1, -1],
    [-1, 9, -3, 1, 1, -3],
    [-1, -3, 9, -3, 1, 1],
    [-1, 1, -3, 9, -3, 1],
    [-1, 1, 1, -3, 9, -3],
    [-1, -3, 1, 1, -3, 9],
])

N_PINV = (66, [
    [11, -19, -1, 5, 5, -1],
    [11, -1, -19, -1, 5, 5],
    [11, 5, -1, -19, -1, 5],
    [11, 5, 5, -1, -19, -1],
    [11, -1, 5, 5, -1, -19],
    [0, 18, -18, -6, 0, 6],
    [0, 6, 18, -18, -6, 0],
    [0, 0, 6, 18, -18, -6],
    [0, -6, 0, 6, 18, -18],
    [0, -18, -6, 0, 6, 18],
])

L_PINV = (396, [
    [55, -11, -11, -11, -11, -11],
    [-11, 103, -5, -41, -41, -5],
    [-11, -5, 103, -5, -41, -41],
    [-11, -41, -5, 103, -5, -41],
    [-11, -41, -41, -5, 103, -5],
    [-11, -5, -41, -41, -5, 103],
])

PINV_BY_KIND = {
    "incidence": M_PINV,
    "signless_laplacian": Q_PINV,
    "oriented": N_PINV,
    "laplacian": L_PINV,
}

MATRIX_BY_KIND = {"incidence": M, "oriented": N, "signless_laplacian": Q, "laplacian": L}


def as_matrix(scaled):
    from fractions import Fraction

    from wheelpinv.dense import DenseMatrix

    den, rows = scaled
    return DenseMatrix([[Fraction(v, den) for v in r] for r in rows])
