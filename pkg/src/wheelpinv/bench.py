"""Wall-clock comparison of the entrywise route, block route and oracle."""

from __future__ import annotations

import time

from wheelpinv import closed_form
from wheelpinv.oracle import pinv_oracle
from wheelpinv.wheel_matrices import build

_GENERATORS = {
    "incidence": (closed_form.incidence_generators_entrywise, closed_form.incidence_blocks),
    "signless_laplacian": (closed_form.incidence_generators_entrywise, closed_form.incidence_blocks),
    "oriented": (closed_form.oriented_generators_entrywise, closed_form.oriented_blocks),
    "laplacian": (closed_form.oriented_generators_entrywise, closed_form.oriented_blocks),
}

COLUMNS = ("kind", "n", "entrywise_s", "block_s", "oracle_s", "note")


def _timed(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def bench_row(kind: str, n: int, oracle_cutoff: int) -> dict:
    entrywise, block = _GENERATORS[kind]
    notes = []
    row = {"kind": kind, "n": n}
    if n >= 5:
        row["entrywise_s"] = _timed(entrywise, n)
    else:
        row["entrywise_s"] = None
        notes.append("entrywise route needs n >= 5")
    # bypass the memo so the block route is actually recomputed
    row["block_s"] = _timed(block.__wrapped__, n)
    if n <= oracle_cutoff:
        row["oracle_s"] = _timed(pinv_oracle, build(kind, n))
    else:
        row["oracle_s"] = None
        notes.append(f"oracle skipped above cutoff {oracle_cutoff}")
    row["note"] = "; ".join(notes)
    return row


def run_bench(lo: int, hi: int, kinds, oracle_cutoff: int) -> list[dict]:
    return [bench_row(k, n, oracle_cutoff) for n in range(lo, hi + 1) for k in kinds]


def rows_to_csv(rows: list[dict]) -> str:
    def cell(v):
        if v is None:
            return ""
        if isinstance(v, float):
            return f"{v:.6f}"
        return str(v)

    lines = [",".join(COLUMNS)]
    lines += [",".join(cell(r[c]) for c in COLUMNS) for r in rows]
    return "\n".join(lines) + "\n"
