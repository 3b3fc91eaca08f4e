"""Smoke tests for the ucinv Python module and the command-line tool."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

import ucinv


def test_pinv_rank_one():
    a = np.ones((2, 2))
    p = ucinv.pinv(a)
    assert np.allclose(p, 0.25 * np.ones((2, 2)), atol=1e-12)
    assert np.allclose(a @ p @ a, a, atol=1e-12)


def test_pinv_matches_numpy():
    rng = np.random.default_rng(0)
    for _ in range(20):
        a = rng.uniform(-1, 1, (rng.integers(1, 7), rng.integers(1, 7)))
        assert np.allclose(ucinv.pinv(a), np.linalg.pinv(a), atol=1e-10)


def test_kron_matches_numpy():
    rng = np.random.default_rng(1)
    a = rng.uniform(-1, 1, (2, 3))
    b = rng.uniform(-1, 1, (3, 2))
    assert np.allclose(ucinv.kron(a, b), np.kron(a, b), atol=0)


def test_uc_inverse_reference_matrix():
    g = ucinv.uc_inverse(np.array([[1.0, 2.0], [4.0, 8.0]]))
    assert np.allclose(g, [[0.25, 0.0625], [0.125, 0.03125]], atol=1e-12)


def test_uc_inverse_unit_consistency():
    rng = np.random.default_rng(2)
    a = rng.uniform(-1, 1, (4, 3))
    d = 10.0 ** rng.uniform(-3, 3, 3)
    e = 10.0 ** rng.uniform(-3, 3, 4)
    assert ucinv.check_unit_consistency("uc", a, d, e) < 1e-8
    assert ucinv.check_rotation_consistency("mp", a, np.eye(4), np.eye(3)) < 1e-12


def test_scale_decompose_reconstructs():
    a = np.array([[1.0, 2.0], [4.0, 8.0]])
    dec = ucinv.scale_decompose(a)
    assert dec.converged
    assert np.allclose(dec.reconstruct(), a, atol=1e-12)
    assert np.allclose(dec.core, np.ones((2, 2)), atol=1e-12)


def test_mixed_inverse_equals_inverse_for_nonsingular():
    rng = np.random.default_rng(3)
    a = rng.uniform(-1, 1, (4, 4)) + 2.5 * np.eye(4)
    assert np.allclose(ucinv.mixed_inverse(a, 2), np.linalg.inv(a), atol=1e-9)


def test_rover_scenario_reproduces_reference_rates():
    out = ucinv.run_scenario("rover-mixed-m")
    assert out["pass"]
    expected = [-1.8182, 2.7071, -0.3536, -0.3536, 0.9142]
    assert np.allclose(out["qdot"][0], expected, atol=1e-3)
    assert out["residual"].max() < 1e-9
    assert not out["divergence"]["diverged"]


def test_divergence_flags():
    assert ucinv.run_scenario("arm-mp-cm")["divergence"]["diverged"]
    assert not ucinv.run_scenario("arm-mp-cm-dt4")["divergence"]["diverged"]


def test_simulate_and_kinematics():
    j = ucinv.arm_jacobian(1.0, 1.1, [np.pi / 6, np.pi / 6, 0.7])
    assert j.shape == (3, 3)
    assert np.allclose(j[2], 0.0)
    run = ucinv.simulate("arm", "uc", unit_scale=1.0)
    run_cm = ucinv.simulate("arm", "uc", unit_scale=100.0)
    assert np.allclose(run["normalized_qdot"], run_cm["normalized_qdot"], atol=1e-9)


def test_scenario_names_cover_registry():
    names = ucinv.scenario_names()
    assert "arm-mp-m" in names
    assert "rover-mixed-cm-rot30" in names
    assert len(names) == 17
    with pytest.raises(ValueError):
        ucinv.run_scenario("nope")


def test_verify_suites_pass():
    reports = ucinv.verify("kron", seed=7, trials=25)
    assert all(r["pass"] for r in reports)


@pytest.fixture()
def cli():
    path = os.environ.get("UCINV_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("UCINV_CLI not set")
    return path


def test_cli_invert_roundtrip(cli, tmp_path):
    src = tmp_path / "a.csv"
    src.write_text("1,2\n4,8\n")
    out = tmp_path / "inv.csv"
    proc = subprocess.run([cli, "invert", str(src), "--kind", "uc", "--out", str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    g = np.array([[float(x) for x in line.split(",")]
                  for line in out.read_text().strip().splitlines()])
    assert np.allclose(g, [[0.25, 0.0625], [0.125, 0.03125]], atol=1e-12)


def test_cli_invert_usage_errors(cli, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("1,x\n")
    proc = subprocess.run([cli, "invert", str(bad)], capture_output=True, text=True)
    assert proc.returncode == 2
    missing = subprocess.run([cli, "invert", str(tmp_path / "absent.csv")],
                             capture_output=True, text=True)
    assert missing.returncode == 2


def test_cli_simulate_scenario(cli, tmp_path):
    out = tmp_path / "traj.csv"
    summary = tmp_path / "summary.json"
    proc = subprocess.run(
        [cli, "simulate", "arm-mp-m", "--out", str(out), "--summary", str(summary)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("t,qd_1")
    assert len(lines) == 101  # header + 100 steps
    report = json.loads(summary.read_text())
    assert report["pass"] is True
    assert report["divergence"]["diverged"] is False
    first = lines[1].split(",")
    assert abs(float(first[1]) - (-27.881)) < 0.02


def test_cli_simulate_unknown_scenario(cli):
    proc = subprocess.run([cli, "simulate", "nope"], capture_output=True, text=True)
    assert proc.returncode == 2
    assert "known scenarios" in proc.stderr


def test_cli_deterministic_outputs(cli, tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    s1, s2 = tmp_path / "a.json", tmp_path / "b.json"
    for out, s in ((out1, s1), (out2, s2)):
        proc = subprocess.run(
            [cli, "simulate", "rover-uc-cm-rot30", "--out", str(out), "--summary", str(s)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
    assert out1.read_bytes() == out2.read_bytes()
    assert s1.read_bytes() == s2.read_bytes()


def test_cli_verify_exit_codes(cli):
    ok = subprocess.run([cli, "verify", "table2"], capture_output=True, text=True)
    assert ok.returncode == 0, ok.stdout + ok.stderr
    assert "PASS table2" in ok.stdout
    unknown = subprocess.run([cli, "verify", "bogus"], capture_output=True, text=True)
    assert unknown.returncode == 2


def test_cli_mixed_invert_solves_the_rover_problem(cli, tmp_path):
    j = ucinv.rover_jacobian(np.pi / 4, [np.pi / 4, 1.1, 0.0, 0.0, 0.0])
    src = tmp_path / "j.csv"
    src.write_text("\n".join(",".join(f"{x!r}" for x in row.tolist()) for row in j) + "\n")
    out = tmp_path / "minv.csv"
    proc = subprocess.run(
        [cli, "invert", str(src), "--kind", "mixed", "--split", "2", "--out", str(out)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    g = np.loadtxt(out, delimiter=",")
    qdot = g @ np.array([2.0, 0.0, -1.0, 0.0, 0.0])
    assert np.allclose(qdot, [-1.8182, 2.7071, -0.3536, -0.3536, 0.9142], atol=1e-3)


def test_cli_config_file(cli, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("simulate.model=arm\nsimulate.inverse=uc\nsimulate.units=cm\n")
    out = tmp_path / "t.csv"
    summary = tmp_path / "s.json"
    proc = subprocess.run(
        [cli, "--config", str(cfg), "simulate", "--out", str(out), "--summary", str(summary)],
        capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    report = json.loads(summary.read_text())
    assert report["config"]["inverse"] == "uc"
    assert report["config"]["unit_scale"] == 100.0


def test_cli_verify_seed_env(cli, tmp_path):
    env = dict(os.environ, UCINV_SEED="12345")
    j1 = tmp_path / "r1.json"
    j2 = tmp_path / "r2.json"
    for j in (j1, j2):
        proc = subprocess.run([cli, "verify", "penrose", "--trials", "25", "--json", str(j)],
                              capture_output=True, text=True, env=env)
        assert proc.returncode == 0
    assert j1.read_bytes() == j2.read_bytes()
    report = json.loads(j1.read_text())
    assert report[0]["seed"] == 12345
