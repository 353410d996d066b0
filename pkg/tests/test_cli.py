import json
from fractions import Fraction

import pytest

from tests.golden_w6 import M_PINV, as_matrix
from wheelpinv.circulant import Circulant
from wheelpinv.closed_form import PinvBundle
from wheelpinv.cli import RunConfig, UsageError, main, parse_float_flag, parse_range
from wheelpinv.dense import DenseMatrix, from_csv, from_json_obj
from wheelpinv.wheel_matrices import build_laplacian


def run(capsys, *argv, **kw):
    code = main(list(argv), **kw)
    out, err = capsys.readouterr()
    return code, out, err


def test_emit_latex_matches_print(capsys):
    code, out, err = run(capsys, "emit", "--kind", "pinv-incidence", "--n", "6", "--format", "latex")
    assert code == 0
    assert out.startswith("\\frac{1}{10}\\left[\\begin{array}{r|rrrrr}")
    body = out.split("\n")[1:-2]
    rows = [l for l in body if l != "\\hline"]
    assert rows[0] == "2 & 4 & -2 & 0 & 0 & -2 \\\\"
    assert body[5] == "\\hline"
    assert "route: entrywise" in err


def test_emit_laplacian_csv(capsys):
    code, out, _ = run(capsys, "emit", "--kind", "laplacian", "--n", "4", "--format", "csv")
    assert code == 0
    assert from_csv(out) == build_laplacian(4)


def test_emit_json_bundle(capsys):
    code, out, err = run(capsys, "emit", "--kind", "pinv-incidence", "--n", "6", "--route", "block")
    obj = json.loads(out)
    assert obj["route"] == "block"
    assert from_json_obj(obj["matrix"]) == as_matrix(M_PINV)
    assert "searle" in err


def test_emit_json_csv_agree(capsys):
    _, j, _ = run(capsys, "emit", "--kind", "pinv-oriented", "--n", "7")
    _, c, _ = run(capsys, "emit", "--kind", "pinv-oriented", "--n", "7", "--format", "csv")
    assert from_json_obj(json.loads(j)["matrix"]) == from_csv(c)


def test_emit_errors(capsys):
    code, _, err = run(capsys, "emit", "--kind", "pinv-laplacian", "--n", "3")
    assert code == 2 and "n >= 4" in err
    code, _, err = run(capsys, "emit", "--kind", "pinv-laplacian", "--n", "4", "--route", "entrywise")
    assert code == 2 and "n >= 5" in err
    code, _, _ = run(capsys, "emit", "--kind", "star", "--n", "6")
    assert code == 2
    code, _, err = run(capsys, "emit", "--kind", "laplacian", "--n", "5", "-o", "/no/such/dir/x.csv")
    assert code == 2 and "cannot write" in err


def test_emit_to_file(tmp_path, capsys):
    path = tmp_path / "q.json"
    assert main(["emit", "--kind", "signless-laplacian", "--n", "5", "-o", str(path)]) == 0
    assert from_json_obj(json.loads(path.read_text())).shape == (5, 5)


def test_float_rendering(capsys):
    code, out, _ = run(capsys, "emit", "--kind", "pinv-signless-laplacian", "--n", "6",
                       "--format", "csv", "--float", "digits=3")
    assert code == 0
    assert out.splitlines()[0].split(",")[0] == "0.25"
    assert parse_float_flag("digits=5") == 5 and parse_float_flag("7") == 7
    with pytest.raises(UsageError):
        parse_float_flag("digits=x")


def test_range_parsing():
    assert parse_range("4..16") == (4, 16)
    assert parse_range("8") == (8, 8)
    with pytest.raises(UsageError):
        parse_range("4-16")
    with pytest.raises(UsageError):
        RunConfig("verify", "all", 9, 5)
    with pytest.raises(UsageError):
        RunConfig("verify", "all", 3, 5)


def test_verify_small_range(capsys):
    code, out, err = run(capsys, "verify", "--range", "4..6")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["n_failures"] == 0
    assert "PASS" in err


def test_verify_n4_notes_skip(capsys):
    code, out, _ = run(capsys, "verify", "--range", "4..4")
    report = json.loads(out)
    assert code == 0
    skipped = [c for c in report["checks"] if c["status"] == "skip"]
    assert {c["check"] for c in skipped} == {"route equivalence"}
    assert len(skipped) == 4


def test_verify_oracle_cutoff_env(capsys, monkeypatch):
    monkeypatch.setenv("WHEELPINV_ORACLE_CUTOFF", "5")
    _, out, _ = run(capsys, "verify", "--range", "6..6", "--kind", "laplacian")
    report = json.loads(out)
    assert report["oracle_cutoff"] == 5
    assert any(c["check"] == "oracle" and c["status"] == "skip" for c in report["checks"])


def tamper_y(bundle):
    if bundle.y_gen is None:
        return bundle
    k = bundle.y_gen.order
    return PinvBundle(bundle.kind, bundle.n, bundle.route, bundle.x_gen,
                      bundle.y_gen + Circulant.identity(k) * Fraction(1, 7))


def test_verify_isolates_tampered_identity(capsys):
    code, out, err = run(capsys, "verify", "--range", "6..6", "--kind", "incidence", tamper=tamper_y)
    report = json.loads(out)
    assert code == 1 and not report["passed"]
    failed = {f["check"] for f in report["failures"]}
    assert "X + C Y = 2(n-1) I" in failed and "Y = J + C^T X" in failed and "M H = I" in failed
    passed = {c["check"] for c in report["checks"] if c["status"] == "pass"}
    assert {"1^T X = 0", "X symmetric", "row-sum law"} <= passed
    assert "check=X + C Y = 2(n-1) I" in err


def test_verify_parallel_matches_serial(capsys):
    _, a, _ = run(capsys, "verify", "--range", "5..6", "--jobs", "2")
    _, b, _ = run(capsys, "verify", "--range", "5..6")
    assert json.loads(a) == json.loads(b)


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--range", "8..8", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 2
    assert lines[0].startswith("kind,n,entrywise_s")
    code, out, err = run(capsys, "bench", "--range", "40..40", "--oracle-cutoff", "16")
    rows = json.loads(out)
    assert rows[0]["oracle_s"] is None and rows[0]["entrywise_s"] is not None
    assert "oracle skipped" in err
