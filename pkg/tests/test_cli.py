from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from zdgraph.cli import FIGURES, run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_check_complemented_false_with_witness():
    code, out = call("check", "Z(18)", "complemented")
    assert (code, out.strip()) == (1, "false; witness: 6")


def test_check_true_exit_zero():
    assert call("check", "Z(2) x Z(2) x Z(4)", "complemented") == (0, "true\n")
    assert call("check", "Z(9)", "uniquely-complemented") == (0, "true\n")


def test_check_other_properties():
    code, out = call("check", "Z(2) x Z(2) x Z(4)", "girth")
    assert code == 0 and out.startswith("girth: 3; cycle: ")
    assert call("check", "Z(2) x Z(3)", "girth") == (0, "girth: inf\n")
    assert call("check", "Z(8)", "ends", "--flavor", "classic") == (0, "ends: 2, 6\n")
    code, out = call("check", "Z(16)", "nil")
    assert code == 0 and "2 (index 4)" in out


def test_uniquely_complemented_false():
    code, out = call("check", "Z(25)", "uniquely-complemented")
    assert code == 1 and out.startswith("false")


def test_ring_info_field():
    code, out = call("ring-info", "Z(5)")
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["order"] == "5"
    assert lines["|Z(R)|"] == "1"
    assert lines["reduced"] == "true"
    assert lines["local"] == "true"
    assert lines["decomposition"] == "field(5)"


def test_ring_info_decomposition():
    code, out = call("ring-info", "Z(12)")
    assert code == 0 and "decomposition: field(3) x B_type(4)" in out


def test_graph_export(tmp_path):
    code, out = call("graph", "Z(18)", "--format", "dot")
    assert code == 0 and out.startswith("graph G {")
    path = tmp_path / "g.json"
    code, _ = call("graph", "Z(8)", "--flavor", "classic", "--format", "json", "-o", str(path))
    payload = json.loads(path.read_text())
    assert code == 0 and payload["flavor"] == "classic" and ["2", "6"] not in payload["edges"]


def test_usage_and_build_errors(capsys):
    assert call("check", "Z(4) x", "complemented")[0] == 2
    assert "offset 6" in capsys.readouterr().err
    assert call("ring-info", "Z(2)[x,y]/(x*y)")[0] == 2
    assert call("ring-info", "Z(9999)")[0] == 2
    assert "Z(9999)" in capsys.readouterr().err
    assert call("check", "Z(4)", "planarity")[0] == 2
    assert call("verify", "Q1.1")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("graph", "Z(4)", "--bogus")[0] == 2


def test_verify_c28_json(tmp_path):
    code, out = call("verify", "C2.8", "--max-n", "400", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    (res,) = doc["results"]
    assert res["claim"] == "C2.8" and res["status"] == "pass"


def test_verify_markdown_to_file(tmp_path):
    path = tmp_path / "r.md"
    code, out = call("verify", "T2.5", "L2.1", "--max-order", "32", "--format", "md", "-o", str(path))
    assert code == 0
    assert "| T2.5 | pass" in path.read_text()
    assert "T2.5: pass" in out


def test_figures_deterministic(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    assert call("figures", "-o", str(a))[0] == 0
    assert call("figures", "-o", str(b))[0] == 0
    names = sorted(p.name for p in a.iterdir())
    assert names == sorted(n for n, _ in FIGURES)
    for n in names:
        assert (a / n).read_bytes() == (b / n).read_bytes()
    z18 = (a / "z18.dot").read_text()
    assert z18.count('";\n') - z18.count("--") == 11


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zdgraph", "check", "Z(18)", "complemented"],
                          capture_output=True, text=True)
    assert proc.returncode == 1 and proc.stdout.strip() == "false; witness: 6"
