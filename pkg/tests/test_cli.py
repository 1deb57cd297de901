import json

import pytest

import vizing as vz
from vizing.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_chi_builtin_prints_value(capsys):
    code, out, _ = run(capsys, "chi", "petersen_minus_vertex")
    assert code == 0 and out == "4\n"


def test_overfull_and_classify(capsys):
    code, out, _ = run(capsys, "overfull", "K3")
    assert code == 0 and out == "true\n"
    code, out, _ = run(capsys, "classify", "C5")
    assert code == 0 and out == "Class2\n"


def test_critical_disconnected_not_applicable(capsys, tmp_path):
    disconnected = vz.encode_graph6(vz.Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    path = tmp_path / "g.g6"
    path.write_text(disconnected + "\n")
    code, out, _ = run(capsys, "critical", str(path))
    assert code == 0 and out == "not-applicable\n"


def test_subgraphs_and_color(capsys):
    code, out, _ = run(capsys, "subgraphs", "K5")
    assert code == 0 and out == "0 1 2 3 4\n"
    code, out, _ = run(capsys, "--format", "records", "color", "K3")
    rec = json.loads(out)
    assert code == 0 and rec["colors_used"] <= 3
    assert rec["coloring"].count("\n") == 2


def test_structure_commands(capsys):
    code, out, _ = run(capsys, "fan", "C5", "--edge", "0", "1")
    assert code == 0 and "multifan x=0" in out
    code, out, _ = run(capsys, "kpaths", "C5", "--edge", "0", "1", "--max-edges", "2")
    assert code == 0 and out.count("kpath") == 2
    code, out, _ = run(capsys, "--format", "records", "branches", "C5", "--short")
    rec = json.loads(out)
    assert code == 0 and rec["structures"] == []


def test_verify_text_and_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "val", "C5")
    assert code == 0
    assert "violations=0" in out and "TOTAL" in out


def test_verify_records_stream(capsys, tmp_path):
    path = tmp_path / "two.g6"
    path.write_text("Dhc\nC~\n")
    code, out, _ = run(capsys, "--format", "records", "verify", "kierstead", str(path))
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 3
    first, second, summary = map(json.loads, lines)
    assert first["graph"] == "Dhc" and second["vacuous"] is True
    assert summary["summary"]["graphs"] == 2


def test_verify_conjecture_record_stream(capsys, tmp_path):
    path = tmp_path / "few.g6"
    path.write_text("Bw\nDhc\nD~{\n")
    code, out, _ = run(capsys, "--format", "records", "verify", "conjecture", str(path))
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4
    summary = json.loads(lines[-1])["summary"]
    assert summary["counters"]["delta_critical"] == 2
    assert summary["counters"]["confirmed_overfull"] == 2


def test_jobs_do_not_change_output(capsys, tmp_path):
    path = tmp_path / "few.g6"
    path.write_text("Bw\nDhc\nD~{\nC~\n")
    code1, out1, _ = run(capsys, "--format", "records", "verify", "multifan", str(path))
    code2, out2, _ = run(capsys, "--format", "records", "--jobs", "2", "verify", "multifan", str(path))
    assert (code1, out1) == (code2, out2)


def test_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "chi", str(tmp_path / "missing.g6"))
    assert code == 2 and "cannot read input" in err
    bad = tmp_path / "bad.g6"
    bad.write_text("B\n")
    code, _, err = run(capsys, "chi", str(bad))
    assert code == 2 and "line 1" in err
    code, _, err = run(capsys, "verify", "nonsense", "C5")
    assert code == 2 and "unknown check" in err
    code, _, err = run(capsys, "fan", "C5", "--edge", "0", "2")
    assert code == 2 and "not an edge" in err


def test_stdin_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("Bw\nDhc\n"))
    code, out, _ = run(capsys, "chi", "-")
    assert code == 0 and out == "3\n3\n"


def test_parse_failures_counted_in_verify(capsys, tmp_path):
    path = tmp_path / "mixed.g6"
    path.write_text("Dhc\n###bad###\n")
    code, out, _ = run(capsys, "--format", "records", "verify", "val", str(path))
    assert code == 0
    lines = out.strip().splitlines()
    assert "error" in json.loads(lines[1])
    assert json.loads(lines[-1])["summary"]["parse_failures"] == 1
