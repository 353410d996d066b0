"""Independent exact pseudoinverse and Penrose-equation checker.

Nothing here knows about wheels or circulants.  The pseudoinverse comes
from a full-rank factorization ``A = L R`` read off the reduced row echelon
form, via ``A+ = R^T (R R^T)^-1 (L^T L)^-1 L^T``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

from wheelpinv.dense import DenseMatrix


class OracleError(AssertionError):
    """The oracle produced something that fails the Penrose equations."""


@dataclass(frozen=True)
class RankFactorization:
    left: DenseMatrix
    right: DenseMatrix
    rank: int


def rref(a: DenseMatrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivots are the first nonzero entry found scanning columns left to
    right and rows top to bottom.
    """
    rows = [list(r) for r in a]
    m, n = a.rows, a.cols
    pivots = []
    r = 0
    for col in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        prow = rows[r]
        for i in range(m):
            f = rows[i][col]
            if i != r and f:
                rows[i] = [v - f * w for v, w in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows, pivots


def rank(a: DenseMatrix) -> int:
    return len(rref(a)[1])


def rank_factorize(a: DenseMatrix) -> RankFactorization:
    echelon, pivots = rref(a)
    r = len(pivots)
    left = DenseMatrix(([row[j] for j in pivots] for row in a), r)
    right = DenseMatrix(echelon[:r], a.cols)
    return RankFactorization(left, right, r)


def _inverse(a: DenseMatrix) -> DenseMatrix:
    k = a.rows
    aug = DenseMatrix(list(r) + [int(i == j) for j in range(k)] for i, r in enumerate(a))
    echelon, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise OracleError("Gram matrix of a full-rank factor is singular")
    return DenseMatrix(row[k:] for row in echelon)


def pinv_oracle(a: DenseMatrix, check: bool = True) -> DenseMatrix:
    """Exact Moore-Penrose inverse of an arbitrary rational matrix."""
    fac = rank_factorize(a)
    if fac.rank == 0:
        return DenseMatrix.zeros(a.cols, a.rows)
    lt, rt = fac.left.T, fac.right.T
    h = rt @ _inverse(fac.right @ rt) @ _inverse(lt @ fac.left) @ lt
    if check:
        report = penrose_check(a, h)
        if not report.all():
            raise OracleError(f"oracle pseudoinverse fails Penrose equations: {report}")
    return h


@dataclass(frozen=True)
class PenroseReport:
    AHA: bool
    HAH: bool
    AH_sym: bool
    HA_sym: bool

    def all(self) -> bool:
        return self.AHA and self.HAH and self.AH_sym and self.HA_sym

    def failures(self) -> list[str]:
        return [k for k, v in asdict(self).items() if not v]

    def to_json_obj(self) -> dict:
        return asdict(self)


def penrose_check(a: DenseMatrix, h: DenseMatrix) -> PenroseReport:
    """Test the four Penrose equations for ``h`` as a candidate ``a+``."""
    if h.shape != (a.cols, a.rows):
        raise ValueError(f"candidate has shape {h.shape}, expected {(a.cols, a.rows)}")
    ah = a @ h
    ha = h @ a
    return PenroseReport(
        AHA=ah @ a == a,
        HAH=h @ ah == h,
        AH_sym=ah.is_symmetric(),
        HA_sym=ha.is_symmetric(),
    )
