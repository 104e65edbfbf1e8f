import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from spinrsc import (
    Coupling,
    CouplingModel,
    build_couplings,
    build_hamiltonian,
    chain_decomposition,
    amplitude_matrix,
)
from spinrsc.cli import main


def test_hamiltonian_csv_round_trips(capsys):
    assert main(["hamiltonian", "--n", "4", "--model", "nn"]) == 0
    out = capsys.readouterr().out
    rows = [[float(x) for x in line.split(",")] for line in out.strip().splitlines()]
    expected = build_hamiltonian(build_couplings(CouplingModel(Coupling.NEAREST_NEIGHBOR, 4)))
    assert np.array_equal(np.array(rows), expected)


def test_amplitudes_json_matches_library(capsys):
    assert main(["amplitudes", "--n", "5", "--model", "all", "--t", "2.0"]) == 0
    data = json.loads(capsys.readouterr().out)
    dec = chain_decomposition(CouplingModel(Coupling.ALL_NODE, 5))
    p = amplitude_matrix(dec, 2.0)
    assert data["p_nm1_1"] == [p[0, 0].real, p[0, 0].imag]
    assert data["p_n_2"] == [p[1, 1].real, p[1, 1].imag]
    assert set(data) == {"p_nm1_1", "p_nm1_2", "p_n_1", "p_n_2"}


def test_optimize_json_fields(capsys):
    assert main(["optimize", "--n", "6", "--model", "all", "--with-v"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"t0", "r_max_sq", "a_opt", "u", "v0", "lam"}
    assert data["r_max_sq"] == pytest.approx(data["lam"][1] ** 2, abs=1e-10)
    a = np.array([complex(*pair) for pair in data["a_opt"]])
    assert np.linalg.norm(a) == pytest.approx(1.0, abs=1e-10)
    u = np.array([[complex(*pair) for pair in row] for row in data["u"]])
    assert np.max(np.abs(u @ u.conj().T - np.eye(2))) < 1e-10


def test_sweep_csv_shape_and_determinism(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    argv = ["sweep", "--n-min", "4", "--n-max", "8", "--models", "nn,all,all+v"]
    assert main(argv + ["--out", str(out1)]) == 0
    assert main(argv + ["--out", str(out2)]) == 0
    text = out1.read_text()
    lines = text.strip().splitlines()
    assert lines[0] == "n,model,t0,r_max_sq"
    assert len(lines) == 1 + 5 * 3
    assert lines[1].startswith("4,nn,")
    assert text == out2.read_text()


def test_critical_length_reports_known_values(capsys):
    assert main(["critical-length", "--threshold", "0.9", "--n-max", "20"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "model,n_critical"
    assert lines[1:] == ["nn,6", "all,4", "all+v,17"]


def test_critical_length_none_in_range(capsys):
    assert main(["critical-length", "--threshold", "1.1", "--n-max", "6"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[1:] == ["nn,none", "all,none", "all+v,none"]


def test_region_csv(tmp_path):
    out = tmp_path / "region.csv"
    assert main([
        "region", "--n", "6", "--model", "all", "--with-v", "--step", "0.5",
        "--out", str(out),
    ]) == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "alpha1,alpha2,lambda,beta1,beta2"
    assert len(lines) == 1 + 9
    first = lines[1].split(",")
    assert first[0] == "0" and first[1] == "0"
    lam = float(lines[1].split(",")[2])
    assert 0.5 <= lam <= 1.0


def test_region_grid_row_count_step_tenth(tmp_path):
    out = tmp_path / "region.csv"
    assert main([
        "region", "--n", "6", "--model", "all", "--step", "0.1", "--out", str(out),
    ]) == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 1 + 121


def test_create_json(capsys):
    assert main([
        "create", "--n", "6", "--model", "all", "--with-v",
        "--alpha1", "0.3", "--alpha2", "0.4", "--phi1", "0.1", "--phi2", "0.7",
    ]) == 0
    data = json.loads(capsys.readouterr().out)
    assert set(data) == {"t0", "rho", "lambda", "beta1", "beta2"}
    rho = np.array([[complex(*pair) for pair in row] for row in data["rho"]])
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-10)
    assert 0.5 <= data["lambda"] <= 1.0


def test_verify_reports_small_deviation(capsys):
    assert main(["verify", "--n", "4", "--model", "nn", "--t", "1.3"]) == 0
    out = capsys.readouterr().out
    label, value = out.split()
    assert label == "max_deviation"
    assert float(value) < 1e-10


def test_domain_error_exit_code(capsys):
    assert main(["hamiltonian", "--n", "3", "--model", "nn"]) == 1
    assert "error" in capsys.readouterr().err


def test_bad_model_list_is_domain_error(capsys):
    assert main(["sweep", "--n-min", "4", "--n-max", "5", "--models", "bogus",
                 "--out", "/dev/null"]) == 1
    assert "nn, all, all+v" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as excinfo:
        main(["hamiltonian", "--n", "4"])  # missing --model
    assert excinfo.value.code == 2
    with pytest.raises(SystemExit) as excinfo:
        main(["no-such-command"])
    assert excinfo.value.code == 2


def test_console_entry_point_runs():
    result = subprocess.run(
        [sys.executable, "-m", "spinrsc", "hamiltonian", "--n", "4", "--model", "all"],
        capture_output=True,
        text=True,
        cwd=Path(__file__).resolve().parents[1],
    )
    assert result.returncode == 0
    assert len(result.stdout.strip().splitlines()) == 4
