"""Command line interface."""

import json

import pytest

from curvesys.cli import main
from curvesys.corpus import bigon_scene, dt_decompositions
from curvesys.dtcoords import DTCoords, save_dt
from curvesys.grids import torus_grid_scene
from curvesys.sceneio import save_scene


@pytest.fixture
def grid_file(tmp_path):
    path = tmp_path / "grid.json"
    save_scene(torus_grid_scene(1, 0, 0, 1), path)
    return str(path)


@pytest.fixture
def g2_files(tmp_path):
    d, x = dt_decompositions()["genus2_closed"]
    p1 = tmp_path / "g2.json"
    p2 = tmp_path / "g2_twisted.json"
    save_dt(d, x, p1)
    save_dt(d, DTCoords(x.m, (x.t[0] + 2, x.t[1], x.t[2]), x.b), p2)
    return str(p1), str(p2)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_torus_mul(capsys):
    code, out = run(capsys, "torus", "mul", "1,0", "0,1")
    assert code == 0 and out.strip() == "(1,1)"
    code, out = run(capsys, "torus", "mul", "0,1", "1,0")
    assert out.strip() == "(1,-1)"


def test_torus_int(capsys):
    code, out = run(capsys, "torus", "int", "2,0", "0,3")
    assert code == 0 and out.strip() == "6"


def test_torus_twist(capsys):
    code, out = run(capsys, "torus", "twist", "--along", "1,0", "--on", "0,1")
    assert code == 0 and out.strip() == "(1,1)"
    code, out = run(capsys, "torus", "twist", "--along", "1,0", "--on", "0,1", "--neg")
    assert out.strip() == "(1,-1)"


def test_torus_twist_rejects_multicurve(capsys):
    code = main(["torus", "twist", "--along", "2,0", "--on", "0,1"])
    assert code == 2


def test_torus_profile_csv(capsys):
    code, out = run(
        capsys,
        "torus",
        "profile",
        "--alpha",
        "1,0",
        "--beta",
        "0,1",
        "--gamma",
        "1,2",
        "--range=-2..2",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,value"
    assert lines[1:] == ["-2,5", "-1,3", "0,1", "1,1", "2,3"]


def test_scene_validate(capsys, grid_file):
    code, out = run(capsys, "scene", "validate", grid_file)
    assert code == 0
    assert "genus=1" in out and "cellular: True" in out


def test_scene_validate_noncellular_exits_1(capsys, grid_file, tmp_path):
    resolved = tmp_path / "resolved.json"
    run(capsys, "scene", "resolve", grid_file, "--from", "a", "--to", "b",
        "--out", str(resolved))
    code, out = run(capsys, "scene", "validate", str(resolved))
    assert code == 1 and "cellular: False" in out


def test_scene_faces(capsys, grid_file):
    code, out = run(capsys, "scene", "faces", grid_file)
    assert code == 0 and "degree 4" in out


def test_scene_census(capsys, grid_file):
    code, out = run(capsys, "scene", "census", grid_file)
    assert code == 0
    assert "class=(1,0)" in out and "class=(0,1)" in out


def test_scene_resolve_roundtrip(capsys, grid_file, tmp_path):
    out_path = tmp_path / "resolved.json"
    code, _ = run(
        capsys, "scene", "resolve", grid_file, "--from", "a", "--to", "b", "--out", str(out_path)
    )
    assert code == 0
    data = json.loads(out_path.read_text())
    assert [c["id"] for c in data["curves"]] == ["a*b"]
    code, out = run(capsys, "scene", "census", str(out_path))
    assert "class=(1,1)" in out


def test_scene_bigons(capsys, tmp_path):
    path = tmp_path / "bigon.json"
    save_scene(bigon_scene(), path)
    code, out = run(capsys, "scene", "bigons", str(path), "--from", "a", "--to", "b")
    assert code == 0 and out.startswith("2 bigon(s)")
    code = main(["scene", "resolve", str(path), "--from", "a", "--to", "b"])
    assert code == 2  # bigons present


def test_scene_missing_flags(capsys, grid_file):
    assert main(["scene", "resolve", grid_file]) == 2


def test_scene_unknown_curve(capsys, grid_file):
    assert main(["scene", "resolve", grid_file, "--from", "a", "--to", "zzz"]) == 2


def test_scene_missing_file(capsys):
    assert main(["scene", "validate", "/no/such/file.json"]) == 2


def test_dt_validate(capsys, g2_files):
    code, out = run(capsys, "dt", "validate", g2_files[0])
    assert code == 0 and "genus 2" in out


def test_dt_twist(capsys, g2_files):
    code, out = run(capsys, "dt", "twist", g2_files[0], "--k", "2,0,0")
    assert code == 0
    assert json.loads(out)["t"] == [5, 0, 1]
    code = main(["dt", "twist", g2_files[0], "--k", "0,1,0"])
    assert code == 2  # twisting a missed curve


def test_dt_solve(capsys, g2_files):
    code, out = run(capsys, "dt", "solve", g2_files[1], g2_files[0])
    assert code == 0 and out.strip() == "2,0,0"


def test_verify_ok(capsys, tmp_path):
    report = tmp_path / "report.json"
    code, out = run(
        capsys,
        "verify",
        "--suite",
        "twist_coords",
        "--trials",
        "25",
        "--seed",
        "11",
        "--out",
        str(report),
    )
    assert code == 0 and "0 failure(s)" in out
    doc = json.loads(report.read_text())
    assert doc["total_failures"] == 0
    assert doc["suites"][0]["suite"] == "twist_coords"


def test_witness_reproducible_via_cli(capsys, grid_file, tmp_path):
    """The resolution oracle's claim for a witness re-runs from the CLI:
    the resolved census class equals the torus product."""
    code, mul_out = run(capsys, "torus", "mul", "1,0", "0,1")
    assert code == 0
    out_path = tmp_path / "resolved.json"
    run(capsys, "scene", "resolve", grid_file, "--from", "a", "--to", "b", "--out", str(out_path))
    code, census_out = run(capsys, "scene", "census", str(out_path))
    assert f"class={mul_out.strip()}" in census_out


def test_verify_bad_bound(capsys):
    assert main(["verify", "--bound", "0"]) == 2


def test_verify_bad_out_path(capsys):
    code = main(
        ["verify", "--suite", "twist_coords", "--trials", "5", "--out", "/no/dir/x.json"]
    )
    assert code == 2
