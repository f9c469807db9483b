"""End-to-end checks of the command line tool (exit codes, files, determinism)."""

import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

BIN = os.environ.get("FRACTALPILE_BIN")
if not BIN or not Path(BIN).exists():
    pytest.skip("FRACTALPILE_BIN not set", allow_module_level=True)


def run(*args, cwd=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, cwd=cwd)


def test_usage_errors():
    assert run("build").returncode == 2  # missing --family
    assert run("build", "--family", "nope", "--level", "1").returncode == 2
    assert run().returncode == 2


def test_build_and_stabilize(tmp_path):
    graph = tmp_path / "g.json"
    r = run("build", "--family", "sg", "--level", "1", "--boundary", "corner-sinks",
            "--out", str(graph))
    assert r.returncode == 0, r.stderr
    doc = json.loads(graph.read_text())
    assert len(doc["vertices"]) == 3
    assert all(v["degree"] == 4 for v in doc["vertices"])

    out = tmp_path / "stab.json"
    csv = tmp_path / "stab.csv"
    ppm = tmp_path / "render.ppm"
    r = run("stabilize", "--graph", str(graph), "--drop", "v0:0", "--out", str(out),
            "--csv", str(csv))
    assert r.returncode == 0, r.stderr
    doc = json.loads(out.read_text())
    assert doc["config"] == [0, 0, 0]
    assert csv.read_text() == "vertex_id,grains\n0,0\n1,0\n2,0\n"

    graph5 = tmp_path / "g5.json"
    assert run("build", "--family", "sg", "--level", "5", "--out", str(graph5)).returncode == 0
    r = run("stabilize", "--graph", str(graph5), "--drop", "v0:500", "--out", str(out),
            "--render", str(ppm), "--render-width", "256")
    assert r.returncode == 0, r.stderr
    first = ppm.read_bytes()
    assert first.startswith(b"P6\n")
    r = run("stabilize", "--graph", str(graph5), "--drop", "v0:500", "--out", str(out),
            "--render", str(ppm), "--render-width", "256")
    assert ppm.read_bytes() == first  # byte-for-byte deterministic

    assert run("stabilize", "--graph", str(graph), "--drop", "99:1",
               "--out", str(out)).returncode == 2


def test_sgc_level0(tmp_path):
    graph = tmp_path / "g0.json"
    assert run("build", "--family", "sgc", "--level", "0", "--out", str(graph)).returncode == 0
    doc = json.loads(graph.read_text())
    assert len(doc["vertices"]) == 1
    assert doc["vertices"][0]["sink_multiplicity"] == 3


def test_identity_csv(tmp_path):
    stem = tmp_path / "identity"
    r = run("identity", "--family", "sgc", "--level", "1", "--level", "2", "--out", str(stem))
    assert r.returncode == 0, r.stderr
    lines = (tmp_path / "identity.csv").read_text().strip().splitlines()
    assert lines[0] == "level,k,conjectured_k,match"
    assert lines[1].startswith("1,2,")
    assert lines[2].startswith("2,8,8,1")
    doc = json.loads((tmp_path / "identity.json").read_text())
    assert doc["manifest"]["command"] == "identity"
    assert "seed" in doc["manifest"]


def test_snf(tmp_path):
    out = tmp_path / "group.json"
    r = run("snf", "--family", "sg", "--level", "1", "--boundary", "corner-sinks",
            "--out", str(out))
    assert r.returncode == 0, r.stderr
    doc = json.loads(out.read_text())
    assert doc["invariant_factors"] == ["5", "10"]
    assert doc["order"] == "50"

    lap = tmp_path / "lap.json"
    lap.write_text("[[3,-1,-1],[-1,3,-1],[-1,-1,3]]")
    r = run("snf", "--laplacian", str(lap), "--out", str(out))
    assert r.returncode == 0, r.stderr
    assert json.loads(out.read_text())["invariant_factors"] == ["4", "4"]


def test_growth_small(tmp_path):
    stem = tmp_path / "growth"
    r = run("growth", "--family", "sg", "--schedule", "doubling", "--min", "16",
            "--max", "256", "--out", str(stem))
    assert r.returncode == 0, r.stderr
    lines = (tmp_path / "growth.csv").read_text().strip().splitlines()
    assert lines[0] == "N,R,lower,upper,level,fit_window"
    assert len(lines) == 6
    for line in lines[1:]:
        n, radius, lower, upper, level, window = line.split(",")
        assert float(lower) < float(radius) < float(upper)


def test_growth_resource_cap(tmp_path):
    r = run("growth", "--family", "sg", "--max", "1048576", "--max-level", "5",
            "--out", str(tmp_path / "g"))
    assert r.returncode == 3


def test_period(tmp_path):
    stem = tmp_path / "period"
    r = run("period", "--family", "sg", "--max-n", "1", "--out", str(stem))
    assert r.returncode == 0, r.stderr
    lines = (tmp_path / "period.csv").read_text().strip().splitlines()
    assert lines[0] == "n,preperiod,period,conjectured,match"
    assert lines[1] == "1,12,12,12,1"

    r = run("period", "--family", "sg", "--max-n", "1", "--max-states", "4",
            "--out", str(stem))
    assert r.returncode == 3
