"""CLI subcommands end to end."""

import json
import os

import numpy as np
import pytest

from afront.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_catalog_list(capsys):
    code, out = run(capsys, "catalog", "list")
    assert code == 0
    assert "rotational" in out and "torus_10pi" in out


def test_catalog_list_json(capsys):
    code, out = run(capsys, "catalog", "list", "--json")
    entries = json.loads(out)
    assert code == 0 and len(entries) >= 35


def test_catalog_build_and_check(tmp_path, capsys):
    spec = tmp_path / "rot.json"
    code, out = run(
        capsys, "catalog", "build", "rotational", "--param", "a=2", "-o", str(spec)
    )
    assert code == 0 and spec.exists()
    code, out = run(capsys, "check", str(spec))
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True


def test_check_fails_for_bad_period(tmp_path, capsys):
    spec = {
        "domain": {"kind": "plane", "punctures": [[0.0, 0.0]]},
        "F": {"type": "rational", "num": [[1, 0]], "den": [[0, 0], [1, 0]]},
        "G": {"type": "rational", "num": [[0, 0], [0, 2]], "den": [[1, 0]]},
        "base_point": [1.0, 0.0],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(spec))
    code, out = run(capsys, "check", str(path))
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_classify(tmp_path, capsys):
    spec = tmp_path / "four.json"
    run(capsys, "catalog", "build", "fournoid", "-o", str(spec))
    code, out = run(capsys, "classify", str(spec))
    assert code == 0
    report = json.loads(out)
    assert len(report["ends"]) == 4
    assert report["osserman"]["equality"] is True
    assert all(e["embedded"] for e in report["ends"])


def test_curvature(tmp_path, capsys):
    spec = tmp_path / "t10.json"
    run(capsys, "catalog", "build", "torus_10pi", "-o", str(spec))
    code, out = run(capsys, "curvature", str(spec))
    assert code == 0
    rep = json.loads(out)
    assert rep["deg_rho"] == 5
    assert abs(rep["total_curvature"] + 10 * np.pi) < 1e-9


def test_mesh_obj_and_csv(tmp_path, capsys):
    spec = tmp_path / "rot.json"
    run(capsys, "catalog", "build", "rotational", "-o", str(spec))
    out_obj = tmp_path / "out.obj"
    code, _ = run(
        capsys, "mesh", str(spec), "-o", str(out_obj),
        "--grid", "16x16", "--rmin", "0.3", "--rmax", "1.5",
    )
    assert code == 0
    assert out_obj.read_text().startswith("v ")
    out_csv = tmp_path / "out.csv"
    code, _ = run(capsys, "mesh", str(spec), "-o", str(out_csv), "--grid", "8x8")
    assert code == 0
    assert out_csv.read_text().startswith("re,im")


def test_mesh_torus(tmp_path, capsys):
    spec = tmp_path / "t10.json"
    run(capsys, "catalog", "build", "torus_10pi", "-o", str(spec))
    out = tmp_path / "torus.obj"
    code, msg = run(
        capsys, "mesh", str(spec), "-o", str(out), "--grid", "24x24",
        "--exclude", "0.08",
    )
    assert code == 0 and out.exists()


def test_solve_genus1(capsys):
    code, out = run(capsys, "solve-genus1")
    assert code == 0
    rep = json.loads(out)
    assert abs(rep["alpha0"] - 1.37048) < 1e-3
    assert abs(rep["c"][0] - 1265.89) < 13
    assert rep["period_report"]["passed"] is True


def test_continue_genus1(capsys):
    code, out = run(capsys, "continue-genus1", "--steps", "2")
    assert code == 0
    fam = json.loads(out)
    assert len(fam) == 2


def test_unknown_catalog_id_exit_code(capsys):
    code, _ = run(capsys, "catalog", "build", "nope")
    assert code == 2


def test_constraint_violation_exit_code(capsys):
    code, _ = run(capsys, "catalog", "build", "rotational", "--param", "a=2i")
    assert code == 2
