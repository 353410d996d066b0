"""Command-line interface: ``wheelpinv emit | verify | bench``.

Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from wheelpinv.bench import rows_to_csv, run_bench
from wheelpinv.closed_form import KINDS, pseudoinverse
from wheelpinv.dense import to_csv, to_json_obj, to_latex
from wheelpinv.exact_field import format_rational
from wheelpinv.verification import default_oracle_cutoff, run_verification
from wheelpinv.wheel_matrices import build

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

MATRIX_KINDS = ("incidence", "oriented", "signless-laplacian", "laplacian")
EMIT_KINDS = MATRIX_KINDS + tuple(f"pinv-{k}" for k in MATRIX_KINDS)


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    kind: str
    lo: int
    hi: int
    route: str = "auto"
    format: str = "json"
    output: Optional[str] = None
    float_digits: Optional[int] = None
    oracle_cutoff: Optional[int] = None
    jobs: int = 1

    def __post_init__(self):
        if self.command == "emit" and self.lo < 4:
            raise UsageError(f"wheel graphs need n >= 4, got n = {self.lo}")
        if not 4 <= self.lo <= self.hi:
            raise UsageError(f"need 4 <= lo <= hi, got range {self.lo}..{self.hi}")
        if self.route == "entrywise" and self.lo < 5:
            raise UsageError("route 'entrywise' needs n >= 5 (the closed-form circulant inverse "
                             "requires order n-1 > 3); use --route block or auto for n = 4")


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", text)
    if m is None:
        raise UsageError(f"bad range {text!r}; expected LO..HI or N")
    lo = int(m[1])
    hi = int(m[2]) if m[2] is not None else lo
    return lo, hi


def parse_float_flag(text: Optional[str]) -> Optional[int]:
    if text is None:
        return None
    m = re.fullmatch(r"(?:digits=)?(\d+)", text.strip())
    if m is None or int(m[1]) < 1:
        raise UsageError(f"bad --float value {text!r}; expected digits=K")
    return int(m[1])


def _internal_kind(kind: str) -> str:
    return kind.replace("-", "_")


def _latex_splits(kind: str, n: int, pinv: bool):
    if kind in ("incidence", "oriented"):
        return ([n - 1], [1]) if pinv else ([1], [n - 1])
    return [1], [1]


def _formatter(digits: Optional[int]):
    if digits is None:
        return format_rational
    return lambda x: f"{float(x):.{digits}g}"


def render_emit(cfg: RunConfig) -> tuple[str, str]:
    """Return (payload, note) for ``emit``."""
    n = cfg.lo
    pinv = cfg.kind.startswith("pinv-")
    kind = _internal_kind(cfg.kind[5:] if pinv else cfg.kind)
    note = ""
    bundle = None
    if pinv:
        bundle = pseudoinverse(kind, n, cfg.route)
        matrix = bundle.matrix
        note = f"route: {bundle.route}"
        if bundle.circulant_route:
            note += f" (circulant inverse via {bundle.circulant_route})"
    else:
        matrix = build(kind, n)
    fmt = _formatter(cfg.float_digits)
    if cfg.format == "csv":
        return to_csv(matrix, fmt), note
    if cfg.format == "latex":
        rows, cols = _latex_splits(kind, n, pinv)
        if cfg.float_digits is not None:
            raise UsageError("--float is not supported with --format latex")
        return to_latex(matrix, rows, cols), note
    if bundle is not None:
        obj = bundle.to_json_obj()
        obj["matrix"] = to_json_obj(matrix, fmt)
    else:
        obj = to_json_obj(matrix, fmt)
    return json.dumps(obj) + "\n", note


def _write(text: str, path: Optional[str]):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wheelpinv",
                                description="Exact Moore-Penrose inverses of wheel-graph matrices.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("emit", help="write a wheel matrix or its pseudoinverse")
    e.add_argument("--kind", required=True, choices=EMIT_KINDS)
    e.add_argument("--n", required=True, type=int)
    e.add_argument("--route", default="auto", choices=("auto", "block", "entrywise"))
    e.add_argument("--format", default="json", choices=("csv", "json", "latex"))
    e.add_argument("--float", dest="float_digits", metavar="digits=K",
                   help="lossy decimal rendering with K significant digits")
    e.add_argument("--output", "-o")

    v = sub.add_parser("verify", help="run the verification suite over a range of n")
    v.add_argument("--range", dest="range_", default="4..16", metavar="LO..HI")
    v.add_argument("--kind", default="all", choices=("all",) + MATRIX_KINDS)
    v.add_argument("--oracle-cutoff", type=int, default=None,
                   help="largest n checked against the oracle (env WHEELPINV_ORACLE_CUTOFF, default 16)")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--output", "-o")

    b = sub.add_parser("bench", help="time entrywise route, block route and oracle")
    b.add_argument("--range", dest="range_", default="8..8", metavar="LO..HI")
    b.add_argument("--kind", default="incidence", choices=("all",) + MATRIX_KINDS)
    b.add_argument("--oracle-cutoff", type=int, default=None)
    b.add_argument("--format", default="json", choices=("csv", "json"))
    b.add_argument("--output", "-o")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "emit":
        return RunConfig("emit", args.kind, args.n, args.n, route=args.route, format=args.format,
                         output=args.output, float_digits=parse_float_flag(args.float_digits))
    lo, hi = parse_range(args.range_)
    cutoff = args.oracle_cutoff if args.oracle_cutoff is not None else default_oracle_cutoff()
    return RunConfig(args.command, args.kind, lo, hi, output=args.output, oracle_cutoff=cutoff,
                     format=getattr(args, "format", "json"), jobs=getattr(args, "jobs", 1))


def _kinds(kind: str):
    return KINDS if kind == "all" else (_internal_kind(kind),)


def cmd_emit(cfg: RunConfig) -> int:
    payload, note = render_emit(cfg)
    _write(payload, cfg.output)
    if note:
        print(note, file=sys.stderr)
    return EXIT_OK


def cmd_verify(cfg: RunConfig, tamper=None) -> int:
    report = run_verification(cfg.lo, cfg.hi, _kinds(cfg.kind), cfg.oracle_cutoff,
                              tamper=tamper, jobs=cfg.jobs)
    _write(json.dumps(report) + "\n", cfg.output)
    status = "PASS" if report["passed"] else "FAIL"
    print(f"{status}: {report['n_checks']} checks, {report['n_failures']} failed, "
          f"{report['n_skipped']} skipped", file=sys.stderr)
    for f in report["failures"]:
        print(f"  failed: kind={f['kind']} n={f['n']} check={f['check']}", file=sys.stderr)
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_bench(cfg: RunConfig) -> int:
    rows = run_bench(cfg.lo, cfg.hi, _kinds(cfg.kind), cfg.oracle_cutoff)
    for r in rows:
        if r["oracle_s"] is None and r["n"] > cfg.oracle_cutoff:
            print(f"notice: n={r['n']} {r['kind']}: oracle skipped above cutoff {cfg.oracle_cutoff}",
                  file=sys.stderr)
    text = rows_to_csv(rows) if cfg.format == "csv" else json.dumps(rows, indent=1) + "\n"
    _write(text, cfg.output)
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None, tamper=None) -> int:
    """Entry point; ``tamper`` is a fault-injection hook for tests of ``verify``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cfg = config_from_args(args)
        if cfg.command == "emit":
            return cmd_emit(cfg)
        if cfg.command == "verify":
            return cmd_verify(cfg, tamper)
        return cmd_bench(cfg)
    except (UsageError, ValueError) as exc:
        print(f"wheelpinv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
