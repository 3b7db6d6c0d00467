import json
import os
import subprocess
import sys

import numpy as np
import pytest
from pydantic import ValidationError

from conftest import run_cli
from pceplast.config import PRESETS, StudyConfig, json_schema, load_config
from pceplast.io import read_csv
from pceplast.pce import read_surrogate_csv


def test_help_via_module():
    out = subprocess.run([sys.executable, "-m", "pceplast", "--help"], capture_output=True, text=True)
    assert out.returncode == 0
    for cmd in ("run", "grid", "trace"):
        assert cmd in out.stdout


@pytest.mark.parametrize("dim,level,count", [(2, 5, 37), (2, 14, 261), (2, 25, 921), (1, 18, 35), (4, 10, 3065)])
def test_grid_counts(tmp_path, capsys, dim, level, count):
    assert run_cli("grid", "--dim", dim, "--grid-level", level, "--out", tmp_path) == 0
    assert capsys.readouterr().out.strip() == str(count)
    header, rows = read_csv(tmp_path / f"grid_s{dim}_L{level}.csv")
    assert len(rows) == count
    assert header == ["index"] + [f"xi_{k + 1}" for k in range(dim)] + ["w"]
    assert sum(float(r[-1]) for r in rows) == pytest.approx(1.0, abs=1e-10)


def test_grid_single_point(tmp_path):
    assert run_cli("grid", "--dim", 1, "--grid-level", 1, "--out", tmp_path) == 0
    _, rows = read_csv(tmp_path / "grid_s1_L1.csv")
    assert [[float(v) for v in r] for r in rows] == [[0.0, 0.0, 1.0]]


@pytest.mark.parametrize("level", [0, 26])
def test_grid_bad_level(tmp_path, level):
    assert run_cli("grid", "--dim", 2, "--grid-level", level, "--out", tmp_path) == 2


def test_dry_run_writes_nothing(tmp_path, capsys):
    out = tmp_path / "o"
    assert run_cli("run", "--experiment", "exp2", "--dry-run", "--out", out) == 0
    plan = json.loads(capsys.readouterr().out)
    assert plan["grid_points"] == {"5": 201, "10": 3065}
    assert plan["mc_samples"] == 100_000
    assert not out.exists()
    assert run_cli("grid", "--dim", 2, "--grid-level", 3, "--dry-run", "--out", out) == 0
    assert not out.exists()


def test_missing_output_dir(monkeypatch):
    monkeypatch.delenv("PCEPLAST_OUT", raising=False)
    assert run_cli("run", "--experiment", "exp1", "--dry-run") == 2


def test_env_output_fallback(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("PCEPLAST_OUT", str(tmp_path / "env"))
    assert run_cli("run", "--experiment", "exp1", "--dry-run") == 0
    assert json.loads(capsys.readouterr().out)["outputs"] == str(tmp_path / "env")


def test_unknown_config_key_rejected(tmp_path):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"experiment": "exp1", "bogus": 1}))
    assert run_cli("run", "--config", cfg, "--out", tmp_path, "--dry-run") == 2


def test_preset_locks_marginals():
    with pytest.raises(ValidationError):
        StudyConfig(experiment="exp1", path={"steps": 10, "eps_max": 1e-3})
    cfg = StudyConfig(experiment="exp1", path=PRESETS["exp1"]["path"])
    assert cfg.path.steps == 80


@pytest.mark.parametrize("bad", [
    {"mc": {"n": 1}}, {"mc": {"n": 2_000_000}}, {"grid": {"levels": [26]}},
    {"pce": {"degrees": [-1]}}, {"pce": {"degrees": []}}, {"mc": {"seed": -3}},
])
def test_config_ranges(bad):
    with pytest.raises(ValidationError):
        StudyConfig.model_validate({"experiment": "exp1", **bad})


def test_custom_config_needs_everything():
    with pytest.raises(ValidationError):
        StudyConfig(experiment="custom")


def test_config_echo_round_trip(tmp_path):
    cfg = StudyConfig(experiment="exp2", mc={"n": 500, "seed": 3})
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cfg.echo()))
    assert load_config(path) == cfg
    assert "properties" in json_schema()


def _custom_config(tmp_path, nu_mean=0.3, nu_std=0.015):
    data = {
        "experiment": "custom",
        "marginals": {
            "E": {"kind": "lognormal", "mu_q": 210e9, "sigma_q": 21e9},
            "nu": {"kind": "lognormal", "mu_q": nu_mean, "sigma_q": nu_std},
            "sigma_y0": {"kind": "constant", "value": 235e6},
            "H": {"kind": "constant", "value": 2.1e9},
        },
        "path": {"steps": 20, "eps_max": 2e-3},
        "pce": {"degrees": [1, 2]},
        "grid": {"levels": [3]},
        "mc": {"n": 500, "seed": 1},
    }
    path = tmp_path / "custom.json"
    path.write_text(json.dumps(data))
    return path


def test_custom_run_outputs(tmp_path):
    out = tmp_path / "out"
    assert run_cli("run", "--config", _custom_config(tmp_path), "--out", out, "--threads", 2) == 0
    names = sorted(os.listdir(out))
    for expected in ("errors.csv", "errors_long.csv", "manifest.json", "r2.csv", "stats_mc.csv",
                     "pce_p1_i9.csv", "pce_p2_i9.csv", "stats_p2_i9.csv", "snapshots"):
        assert expected in names
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["complete"] is True
    assert manifest["config"]["mc"] == {"n": 500, "seed": 1}
    header, rows = read_csv(out / "errors.csv")
    assert header == ["metric", "p", "i=9"]
    assert [r[:2] for r in rows] == [["mean", "-"], ["std", "1"], ["std", "2"], ["q01", "1"], ["q01", "2"]]
    sur = read_surrogate_csv(out / "pce_p2_i9.csv")
    assert (sur.s, sur.p, sur.steps) == (2, 2, 20)
    _, r2 = read_csv(out / "r2.csv")
    assert [int(r[0]) for r in r2] == list(range(1, 21))


def test_numerical_failure_exit_code(tmp_path, capsys):
    cfg = _custom_config(tmp_path, nu_mean=0.45, nu_std=0.05)
    assert run_cli("run", "--config", cfg, "--out", tmp_path / "o") == 3
    assert "numerical failure" in capsys.readouterr().err


def test_table_layouts_and_rerun_identity(tmp_path):
    a, b = tmp_path / "a", tmp_path / "b"
    for out in (a, b):
        assert run_cli("run", "--experiment", "exp1", "--mc-samples", 2000, "--seed", 4, "--out", out) == 0
    header, rows = read_csv(a / "errors.csv")
    assert header == ["metric", "p", "i=9", "i=17", "i=19", "i=33", "i=35"]
    assert [r[:2] for r in rows] == [["mean", "-"], ["std", "1"], ["std", "3"], ["std", "5"],
                                     ["q01", "1"], ["q01", "3"], ["q01", "5"]]
    for name in os.listdir(a):
        if name.endswith(".csv"):
            assert (a / name).read_bytes() == (b / name).read_bytes(), name


def test_exp2_layout(tmp_path):
    out = tmp_path / "e2"
    assert run_cli("run", "--experiment", "exp2", "--mc-samples", 500, "--out", out) == 0
    header, rows = read_csv(out / "errors.csv")
    assert header == ["metric", "p", "i=201", "i=3065"]
    assert len(rows) == 5


def test_trace_point_and_sweep(tmp_path, capsys):
    run_dir = tmp_path / "r"
    assert run_cli("run", "--experiment", "exp1", "--mc-samples", 200, "--pce-degree", 5,
                   "--grid-level", 18, "--out", run_dir) == 0
    sur = run_dir / "pce_p5_i35.csv"
    out = tmp_path / "t"
    assert run_cli("trace", "--experiment", "exp1", "--xi", 0.5, "--surrogate", sur, "--out", out) == 0
    header, rows = read_csv(out / "trace.csv")
    assert header == ["t", "eps11", "sigma11_model", "sigma11_pce"]
    data = np.array(rows, dtype=float)
    assert len(data) == 80
    # linear-elastic early steps are reproduced by the surrogate
    np.testing.assert_allclose(data[:10, 3], data[:10, 2], rtol=1e-6)
    assert run_cli("trace", "--experiment", "exp1", "--xi", 0.0, "--sweep", -3, 3, 61,
                   "--surrogate", sur, "--out", out) == 0
    for t in (29, 34):
        header, rows = read_csv(out / f"slice_T{t}.csv")
        assert header == ["xi_1", "sigma11_model", "sigma11_pce"] and len(rows) == 61


def test_trace_errors(tmp_path):
    assert run_cli("trace", "--experiment", "exp1", "--xi", 0, 1, "--out", tmp_path) == 2
    assert run_cli("trace", "--experiment", "exp2", "--xi", 0, 0, 0, 0, "--sweep", -1, 1, 3,
                   "--at-steps", 400, "--out", tmp_path) == 2
    assert run_cli("trace", "--xi", 0, "--out", tmp_path) == 2
