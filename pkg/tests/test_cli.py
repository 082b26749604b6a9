"""Command-line surface: documents, exit codes, determinism."""

import json

import pytest

import fflvstring.cli as cli
from fflvstring.cli import main, parse_polytope_document
from fflvstring.errors import VerificationError


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_fflv_points_a3(capsys):
    code, out, _ = run_cli(
        capsys, "fflv", "points", "--type", "A", "--rank", "3", "--weight", "0,1,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["type"] == "A" and doc["rank"] == 3 and doc["kind"] == "fflv"
    assert len(doc["points"]) == 6
    assert len(doc["labels"]) == 6
    assert doc["points"] == sorted(doc["points"])


def test_fflv_points_rank1_trivial(capsys):
    code, out, _ = run_cli(
        capsys, "fflv", "points", "--type", "A", "--rank", "1", "--weight", "0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["points"] == [[0]]


def test_fflv_points_c2(capsys):
    code, out, _ = run_cli(
        capsys, "fflv", "points", "--type", "C", "--rank", "2", "--weight", "0,1"
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["points"]) == 5
    barred = [lab for lab in doc["labels"] if lab["barred"]]
    assert barred == [{"row": 1, "col": 1, "barred": True}]


def test_stringpoly_points_a2(capsys):
    code, out, _ = run_cli(
        capsys, "stringpoly", "points", "--type", "A", "--rank", "2", "--weight", "1,0"
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "string"
    assert doc["word"] == [2, 3, 1]
    assert len(doc["points"]) == 3


def test_stringpoly_points_zero_weight(capsys):
    code, out, _ = run_cli(
        capsys, "stringpoly", "points", "--type", "A", "--rank", "2", "--weight", "0,0"
    )
    assert code == 0
    assert json.loads(out)["points"] == [[0, 0, 0]]


def test_stringpoly_points_c3(capsys):
    code, out, _ = run_cli(
        capsys, "stringpoly", "points", "--type", "C", "--rank", "3", "--weight", "0,1,0"
    )
    assert code == 0
    assert len(json.loads(out)["points"]) == 14


def test_document_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "fflv", "points", "--type", "C", "--rank", "2", "--weight", "1,1"
    )
    assert code == 0
    doc = parse_polytope_document(out)
    assert json.dumps(doc, indent=2) + "\n" == out


def test_documents_byte_identical(capsys):
    args = ("stringpoly", "points", "--type", "A", "--rank", "3", "--weight", "1,0,1")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_verify_main_passes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "main", "--type", "A", "--rank", "2", "--max-level", "2"
    )
    assert code == 0
    assert "ok" in out


def test_verify_main_level_zero(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "main", "--type", "C", "--rank", "2", "--max-level", "0"
    )
    assert code == 0


def test_verify_main_corrupted_fixture_fails(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "main", "--type", "A", "--rank", "2", "--max-level", "2",
        "--corrupt-matrix",
    )
    assert code == 1
    assert "missing" in out or "unmatched" in out


def test_verify_main_json_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json", tmp_path / "c.json"]
    for path, threads in zip(paths, ("1", "1", "3")):
        code, _, _ = run_cli(
            capsys,
            "verify", "main", "--type", "A", "--rank", "2", "--max-level", "2",
            "--json", str(path), "--threads", threads,
        )
        assert code == 0
    blobs = [p.read_bytes() for p in paths]
    assert blobs[0] == blobs[1] == blobs[2]


def test_verify_unimodular(capsys):
    code, out, _ = run_cli(capsys, "verify", "unimodular", "--max-rank", "6")
    assert code == 0
    assert "det = -1" in out or "det = 1" in out


def test_verify_fold(capsys):
    code, out, _ = run_cli(capsys, "verify", "fold", "--max-rank", "3")
    assert code == 0
    assert "True" in out


def test_verify_comm(capsys):
    code, out, _ = run_cli(capsys, "verify", "comm", "--max-rank", "3")
    assert code == 0
    assert "ok" in out


def test_usage_error_wrong_weight_length(capsys):
    code, _, err = run_cli(
        capsys, "fflv", "points", "--type", "A", "--rank", "3", "--weight", "1,0"
    )
    assert code == 2
    assert "weight" in err


def test_usage_error_bad_type(capsys):
    code, _, err = run_cli(
        capsys, "fflv", "points", "--type", "B", "--rank", "2", "--weight", "0,0"
    )
    assert code == 2


def test_usage_error_unknown_flag(capsys):
    code, _, _ = run_cli(capsys, "fflv", "points", "--bogus", "1")
    assert code == 2


def test_usage_error_negative_weight(capsys):
    code, _, err = run_cli(
        capsys, "fflv", "points", "--type", "A", "--rank", "2", "--weight", "1,-1"
    )
    assert code == 2


def test_gate_failure_exits_three(capsys, monkeypatch):
    def explode(lt, weight):
        raise VerificationError("fflv.minkowski_cardinality", "forced by test")

    monkeypatch.setattr(cli, "points", explode)
    code, out, err = run_cli(
        capsys, "fflv", "points", "--type", "A", "--rank", "2", "--weight", "1,0"
    )
    assert code == 3
    assert "fflv.minkowski_cardinality" in err
    assert out == ""


def test_out_file_writing(tmp_path, capsys):
    path = tmp_path / "points.json"
    code, out, _ = run_cli(
        capsys,
        "fflv", "points", "--type", "A", "--rank", "2", "--weight", "1,0",
        "--out", str(path),
    )
    assert code == 0
    assert out == ""
    doc = json.loads(path.read_text())
    assert len(doc["points"]) == 3


def test_threads_env_fallback(monkeypatch):
    monkeypatch.setenv("FSL_THREADS", "5")
    assert cli._default_threads() == 5
    monkeypatch.setenv("FSL_THREADS", "junk")
    assert cli._default_threads() == 1
    monkeypatch.delenv("FSL_THREADS")
    assert cli._default_threads() == 1
