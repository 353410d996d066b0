"""Verification suite run by ``wheelpinv verify``.

Every (kind, n) pair is checked for the Penrose equations, oracle
equality, block/entrywise route equivalence, the block identities behind
each closed form, and the circulant row-sum law.  Results are keyed by
``(kind, n, check)`` so pairs can be evaluated in any order or in parallel.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from wheelpinv.circulant import Circulant, circ_inverse, circ_mul
from wheelpinv.closed_form import KINDS, PinvBundle, pseudoinverse, rim_circulant
from wheelpinv.dense import DenseMatrix
from wheelpinv.oracle import penrose_check, pinv_oracle
from wheelpinv.wheel_matrices import build

DEFAULT_ORACLE_CUTOFF = 16
ORACLE_CUTOFF_ENV = "WHEELPINV_ORACLE_CUTOFF"

Tamper = Callable[[PinvBundle], PinvBundle]


def default_oracle_cutoff() -> int:
    raw = os.environ.get(ORACLE_CUTOFF_ENV)
    return int(raw) if raw else DEFAULT_ORACLE_CUTOFF


@dataclass(frozen=True)
class CheckResult:
    kind: str
    n: int
    check: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""

    def to_json_obj(self) -> dict:
        out = {"kind": self.kind, "n": self.n, "check": self.check, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


def block_identities(kind: str, n: int, x: Circulant, y: Optional[Circulant]) -> dict[str, bool]:
    """Identities among X, Y and C used to derive each closed form."""
    k = n - 1
    c = rim_circulant(kind, n)
    eye, ones = Circulant.identity(k), Circulant.ones(k)
    # column sums of a circulant all equal its generator sum
    col_sum = x.row_sum()
    out = {"X symmetric": x.is_symmetric()}
    if kind in ("incidence", "signless_laplacian"):
        out["1^T X = 0"] = col_sum == 0
        if y is not None:
            out["X + C Y = 2(n-1) I"] = x + circ_mul(c, y) == eye * (2 * (n - 1))
            out["X^2 + Y^T Y = (n-1)(J + 2X)"] = (
                circ_mul(x, x) + circ_mul(y.T, y) == (ones + x * 2) * (n - 1))
            out["Y = J + C^T X"] = y == ones + circ_mul(c.T, x)
    else:
        out["1^T X = -1^T"] = col_sum == -1
        if y is not None:
            out["C Y - X = n I - J"] = circ_mul(c, y) - x == eye * n - ones
            out["X X + Y^T Y = -J - n X"] = circ_mul(x, x) + circ_mul(y.T, y) == -ones - x * n
            out["Y = -C^T X"] = y == -circ_mul(c.T, x)
    return out


def _matrix_identities(kind: str, n: int, h: DenseMatrix, partner: Optional[DenseMatrix]) -> dict[str, bool]:
    a = build(kind, n)
    if kind == "incidence":
        return {"M H = I": a @ h == DenseMatrix.identity(n)}
    if kind == "oriented":
        target = DenseMatrix.identity(n) - DenseMatrix.ones(n).scale(Fraction(1, n))
        return {"N H = I - J/n": a @ h == target}
    out = {"symmetric": h.is_symmetric()}
    if partner is not None:
        label = "Q+ = (M+)^T M+" if kind == "signless_laplacian" else "L+ = (N+)^T N+"
        out[label] = partner.T @ partner == h
    if kind == "laplacian":
        out["L+ 1 = 0"] = all(s == 0 for s in h.row_sums())
    return out


def row_sum_law(kind: str, n: int) -> bool:
    c = rim_circulant(kind, n)
    gram = circ_mul(c, c.T) + Circulant.identity(n - 1)
    return circ_row_sum_product(gram) == 1


def circ_row_sum_product(x: Circulant):
    return circ_inverse(x).row_sum() * x.row_sum()


def check_pair(kind: str, n: int, oracle_cutoff: int, tamper: Optional[Tamper] = None) -> list[CheckResult]:
    """All checks for one (kind, n); ``tamper`` is a fault-injection hook."""
    results = []

    def record(check, ok, detail=""):
        results.append(CheckResult(kind, n, check, "pass" if ok else "fail", detail))

    def skip(check, why):
        results.append(CheckResult(kind, n, check, "skip", why))

    bundle = pseudoinverse(kind, n, "block")
    if tamper is not None:
        bundle = tamper(bundle)
    h = bundle.matrix
    a = build(kind, n)

    report = penrose_check(a, h)
    record("penrose", report.all(), ", ".join(report.failures()))

    if n <= oracle_cutoff:
        record("oracle", pinv_oracle(a) == h)
    else:
        skip("oracle", f"n > oracle cutoff {oracle_cutoff}")

    if n >= 5:
        other = pseudoinverse(kind, n, "entrywise")
        same = other.x_gen == bundle.x_gen and other.y_gen == bundle.y_gen and other.matrix == h
        record("route equivalence", same)
    else:
        skip("route equivalence", "entrywise route needs n >= 5")

    for name, ok in block_identities(kind, n, bundle.x_gen, bundle.y_gen).items():
        record(name, ok)

    partner = None
    if kind in ("signless_laplacian", "laplacian"):
        base = "incidence" if kind == "signless_laplacian" else "oriented"
        pb = pseudoinverse(base, n, "block")
        partner = (tamper(pb) if tamper is not None else pb).matrix
    for name, ok in _matrix_identities(kind, n, h, partner).items():
        record(name, ok)

    record("row-sum law", row_sum_law(kind, n))
    return results


def run_verification(lo: int, hi: int, kinds=KINDS, oracle_cutoff: Optional[int] = None,
                     tamper: Optional[Tamper] = None, jobs: int = 1) -> dict:
    if oracle_cutoff is None:
        oracle_cutoff = default_oracle_cutoff()
    pairs = [(k, n) for n in range(lo, hi + 1) for k in kinds]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(check_pair, *zip(*pairs), [oracle_cutoff] * len(pairs),
                                   [tamper] * len(pairs)))
    else:
        chunks = [check_pair(k, n, oracle_cutoff, tamper) for k, n in pairs]
    results = sorted((r for chunk in chunks for r in chunk), key=lambda r: (r.n, KINDS.index(r.kind)))
    failures = [r for r in results if r.status == "fail"]
    return {
        "range": [lo, hi],
        "kinds": list(kinds),
        "oracle_cutoff": oracle_cutoff,
        "checks": [r.to_json_obj() for r in results],
        "failures": [r.to_json_obj() for r in failures],
        "n_checks": len(results),
        "n_failures": len(failures),
        "n_skipped": sum(r.status == "skip" for r in results),
        "passed": not failures,
    }
