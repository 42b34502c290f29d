import dataclasses
import json
import math

import pytest

import trabound.reference as reference
from trabound.cli import main

BENCH_FLAGS = ["--model", "I", "--a", "1", "--A", "1", "--B", "100", "--C", "2"]


def run_cli(args):
    try:
        main(list(args))
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


def read_table(path):
    meta, columns, rows = {}, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[2:].partition("=")
            meta[key] = value
        elif columns is None:
            columns = line.split(",")
        else:
            rows.append(line.split(","))
    return meta, columns, rows


def test_spectrum_csv(tmp_path):
    out = tmp_path / "t1.csv"
    code = run_cli(
        ["spectrum", *BENCH_FLAGS, "--method", "hmd", "--M", "100", "--lambda", "10",
         "--out", str(out)]
    )
    assert code == 0
    meta, columns, rows = read_table(out)
    assert meta["model"] == "I"
    assert meta["method"] == "hmd"
    assert meta["tra_capacity"] == "6"
    assert columns == ["k", "energy"]
    assert len(rows) == 5
    assert float(rows[0][1]) == pytest.approx(-26.92691153111182, rel=1e-10)
    # 15 significant digits requested
    assert len(rows[0][1].replace("-", "").replace(".", "")) >= 14


def test_usage_error_exit_code():
    assert run_cli(["spectrum", "--a", "1"]) == 1          # missing --model
    assert run_cli(["spectrum", "--model", "X"]) == 1      # bad choice
    assert run_cli(["nonsense-command"]) == 1


def test_numerical_error_exit_code(tmp_path):
    # A < 0 is rejected by the solver -> service 422 -> exit 2
    code = run_cli(
        ["spectrum", "--model", "I", "--A", "-3", "--B", "100", "--C", "2",
         "--method", "hmd", "--M", "20"]
    )
    assert code == 2


def test_round_trip_byte_identical(tmp_path):
    first = tmp_path / "run.csv"
    code = run_cli(
        ["spectrum", *BENCH_FLAGS, "--method", "lmm", "--M", "50", "--h", "0.1",
         "--out", str(first)]
    )
    assert code == 0
    sidecar = tmp_path / "run.config.json"
    assert sidecar.exists()
    config = json.loads(sidecar.read_text())
    assert config["command"] == "spectrum"
    second = tmp_path / "replay.csv"
    code = run_cli(["spectrum", "--config", str(sidecar), "--out", str(second)])
    assert code == 0
    assert first.read_bytes() == second.read_bytes()


def test_json_format(tmp_path):
    out = tmp_path / "t1.json"
    code = run_cli(
        ["spectrum", *BENCH_FLAGS, "--method", "lmm", "--M", "50", "--h", "0.1",
         "--format", "json", "--out", str(out)]
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["columns"] == ["k", "energy"]
    assert len(data["rows"]) == 5


def test_spd_scan_rows(tmp_path):
    out = tmp_path / "spd.csv"
    code = run_cli(
        ["spd-scan", "--model", "I", "--grid", "12x10", "--B-over-A", "0:8",
         "--C-over-A", "-2:2", "--out", str(out)]
    )
    assert code == 0
    meta, columns, rows = read_table(out)
    assert columns == ["b_over_a", "c_over_a", "label", "positive_roots"]
    assert len(rows) == 120
    labels = {row[2] for row in rows}
    assert labels == {"scattering", "bound", "bound+resonance"}


def test_potential_curve(tmp_path):
    out = tmp_path / "curves.csv"
    code = run_cli(
        ["potential-curve", "--model", "II", "--C-over-A", "2", "--B-over-A", "4,8,16",
         "--grid", "0.1:5:40", "--out", str(out)]
    )
    assert code == 0
    meta, columns, rows = read_table(out)
    assert columns[0] == "x_over_a"
    assert len(columns) == 4
    assert len(rows) == 40
    from trabound.potentials import PotentialSpec, eval_potential

    spec = PotentialSpec(model="II", a=1.0, A=1.0, B=4.0, C=2.0)
    x = float(rows[7][0])
    assert float(rows[7][1]) == pytest.approx(eval_potential(spec, x), rel=1e-10)


def test_wavefunction_output(tmp_path):
    out = tmp_path / "wf.csv"
    code = run_cli(
        ["wavefunction", *BENCH_FLAGS, "--method", "hmd", "--M", "60", "--lambda", "10",
         "--grid", "0:10:51", "--out", str(out)]
    )
    assert code == 0
    meta, columns, rows = read_table(out)
    assert columns == ["x", "psi_0", "psi_1", "psi_2", "psi_3", "psi_4"]
    assert len(rows) == 51
    assert float(rows[0][1]) == 0.0
    assert "energy_0" in meta


def test_compare_benchmark_passes(tmp_path):
    out = tmp_path / "cmp.csv"
    code = run_cli(["compare", *BENCH_FLAGS, "--out", str(out)])
    assert code == 0
    meta, columns, rows = read_table(out)
    assert meta["has_reference"] == "true"
    assert meta["all_passed"] == "true"
    assert len(rows) == 5
    assert all(row[-1] == "true" for row in rows)


def test_compare_mismatch_exit_code(tmp_path, monkeypatch):
    """A deliberately corrupted reference table must trip exit code 3."""
    broken = dataclasses.replace(
        reference.TABLE_I, hmd=tuple(v * (1 + 1e-3) for v in reference.TABLE_I.hmd)
    )
    monkeypatch.setitem(reference.TABLES, reference.Model.I, broken)
    out = tmp_path / "cmp.csv"
    code = run_cli(["compare", *BENCH_FLAGS, "--out", str(out)])
    assert code == 3
    meta, _, _ = read_table(out)
    assert meta["all_passed"] == "false"


def test_compare_non_reference_parameters(tmp_path):
    out = tmp_path / "cmp2.csv"
    code = run_cli(
        ["compare", "--model", "I", "--a", "1", "--A", "1", "--B", "60", "--C", "2",
         "--M", "50", "--lambda", "10", "--h", "0.1", "--out", str(out)]
    )
    assert code == 0
    meta, _, rows = read_table(out)
    assert meta["has_reference"] == "false"
    assert all(float(r[4]) < 1e-6 for r in rows)  # inter-method agreement
