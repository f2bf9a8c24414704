import json
import math
import os
import subprocess
import sys

import pytest

LN2 = math.log(2.0)


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("SPINOR_LAB_TOL", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run([sys.executable, "-m", "spinorlab", *args],
                          capture_output=True, text=True, env=env)


def test_no_subcommand_is_usage_error():
    result = run_cli()
    assert result.returncode == 2


def test_check_passes_and_reports_every_suite():
    result = run_cli("check", "--trials", "25")
    assert result.returncode == 0, result.stdout + result.stderr
    assert "all 22 suites passed" in result.stdout
    assert "FAIL" not in result.stdout


def test_check_deterministic_report_bytes():
    first = run_cli("check", "--trials", "25", "--seed", "3")
    second = run_cli("check", "--trials", "25", "--seed", "3")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_check_unachievable_tolerance_fails():
    result = run_cli("check", "--trials", "10", "--tol", "1e-30")
    assert result.returncode == 1
    assert "first failing suite" in result.stdout


def test_check_env_tolerance_override():
    result = run_cli("check", "--trials", "10", env_extra={"SPINOR_LAB_TOL": "1e-30"})
    assert result.returncode == 1


def test_axis_rest_point():
    result = run_cli("axis", "--m", "1", "--eta", "0", "--omega", "0")
    assert result.returncode == 0
    record = json.loads(result.stdout)
    assert record["theta_rad"] == 0.0
    assert record["phi"] == 0.0
    assert record["cos2_half_theta"] == 1.0


def test_axis_rest_particle_point():
    result = run_cli("axis", "--m", "1", "--eta", "0", "--omega", repr(LN2))
    record = json.loads(result.stdout)
    assert abs(record["theta_rad"] - math.acos(0.8)) <= 1e-9
    assert abs(record["theta_deg"] - math.degrees(math.acos(0.8))) <= 1e-7


def test_axis_scenario_point():
    result = run_cli("axis", "--m", "1", "--eta", repr(LN2), "--omega", repr(LN2))
    record = json.loads(result.stdout)
    assert abs(record["theta_rad"] - 0.9546907647470624) <= 1e-9
    assert record["p_prime"] == pytest.approx([1.5625, 0.9375, 0.0, -0.75], abs=1e-12)


def test_axis_invalid_mass_is_usage_error():
    result = run_cli("axis", "--m", "0", "--eta", "0", "--omega", "0")
    assert result.returncode == 2
    assert "invalid input" in result.stderr


def test_sweep_small_grid(tmp_path):
    out = tmp_path / "sweep.csv"
    result = run_cli("sweep", "--eta-max", repr(LN2), "--omega-max", repr(LN2),
                     "--steps", "2", "--out", str(out))
    assert result.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "eta,omega,theta_rad,phi_rad,cos2_half_theta"
    assert len(lines) == 5
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    assert rows[0][2] == 0.0                      # (0, 0)
    assert abs(rows[1][2] - math.acos(0.8)) <= 1e-9   # (0, ln 2)
    assert rows[2][2] == 0.0                      # (ln 2, 0)
    assert abs(rows[3][2] - 0.9546907647470624) <= 1e-9
    assert all(row[3] == 0.0 for row in rows)


def test_sweep_byte_stable(tmp_path):
    first = tmp_path / "a.csv"
    second = tmp_path / "b.csv"
    for out in (first, second):
        result = run_cli("sweep", "--eta-max", "1.5", "--omega-max", "1.5",
                         "--steps", "7", "--out", str(out))
        assert result.returncode == 0
    assert first.read_bytes() == second.read_bytes()


def test_sweep_unwritable_path_is_io_error(tmp_path):
    result = run_cli("sweep", "--steps", "2", "--out",
                     str(tmp_path / "missing" / "sweep.csv"))
    assert result.returncode == 1
    assert "io error" in result.stderr


def test_fig2_dataset(tmp_path):
    out = tmp_path / "fig2.csv"
    result = run_cli("fig2", "--omega-max", "5", "--steps", "201", "--out", str(out))
    assert result.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "omega,theta_rad,cos2_half_theta"
    assert len(lines) == 202
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    assert rows[0][1] == 0.0
    thetas = [row[1] for row in rows]
    assert all(b >= a for a, b in zip(thetas, thetas[1:]))
    assert thetas[-1] < math.pi / 2


def test_fig2_contains_pinned_point(tmp_path):
    out = tmp_path / "fig2.csv"
    result = run_cli("fig2", "--omega-max", repr(LN2), "--steps", "2",
                     "--out", str(out))
    assert result.returncode == 0
    last = out.read_text().splitlines()[-1].split(",")
    assert abs(float(last[1]) - math.acos(0.8)) <= 1e-9
    assert abs(float(last[2]) - 0.9) <= 1e-12


def test_state_rest_basis_spinor():
    result = run_cli("state", "--m", "1", "--p", "1,0,0,0", "--alpha", "0")
    assert result.returncode == 0
    record = json.loads(result.stdout)
    assert abs(record["psi_bar_psi"] - 1.0) <= 1e-12
    assert abs(record["j0"] - 1.0) <= 1e-12
    assert record["bloch"] == pytest.approx([0, 0, 1], abs=1e-12)


def test_state_moving_basis_spinor():
    result = run_cli("state", "--m", "1", "--p", "1.25,0,0,0.75", "--alpha", "0")
    record = json.loads(result.stdout)
    assert abs(record["j0"] - 1.25) <= 1e-12
    assert abs(record["psi_dag_psi"] - 1.25) <= 1e-12
    flat = [value for pair in record["components"] for value in pair]
    assert flat == pytest.approx([0.5, 0, 0, 0, 1, 0, 0, 0], abs=1e-12)


def test_state_superposition_from_file(tmp_path):
    record = {"kind": "particle", "m": 1.0, "p": [1.0, 0.0, 0.0, 0.0],
              "components": [[0.5, 0.0]] * 4}
    path = tmp_path / "state.json"
    path.write_text(json.dumps(record))
    result = run_cli("state", "--file", str(path))
    assert result.returncode == 0
    out = json.loads(result.stdout)
    assert out["bloch"] == pytest.approx([1, 0, 0], abs=1e-12)
    assert abs(out["psi_bar_psi"] - 1.0) <= 1e-12


def test_state_malformed_json_is_parse_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    result = run_cli("state", "--file", str(path))
    assert result.returncode == 2
    assert "invalid input" in result.stderr


def test_state_missing_constructor_flags():
    result = run_cli("state", "--m", "1")
    assert result.returncode == 2
