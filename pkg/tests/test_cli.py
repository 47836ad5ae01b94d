import json

import pytest

from src import __version__
from src.cli.commands import EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, run_cli
from src.cli.emit import CSV, JSON, emit_table, format_value, read_csv_table
from src.models.experiment import config_digest
from src.models.results import PhaseTable
from src.theory import curves


def _write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def _experiment(**overrides):
    data = {"model": "direct", "n": 100, "beta": 0.6, "r": 0.8, "sigma": 1.0, "stat": "hc",
            "reps_null": 100, "reps_alt": 100, "seed": 3}
    data.update(overrides)
    return data


def test_curve_command_csv(capsys):
    code = run_cli(["curve", "--kind", "one-sample", "--sigma", "1", "--beta-grid", "0.5:1.0:0.01"])
    assert code == EXIT_OK
    metadata, header, rows = read_csv_table(capsys.readouterr().out)
    assert header == ("beta", "rho")
    assert len(rows) == 50
    assert metadata["version"] == __version__
    for beta, value in rows[1:]:
        # 12 cifras significativas
        assert float(value) == pytest.approx(curves.rho(float(beta), 1.0), rel=1e-11, abs=1e-12)


def test_curve_empty_grid_is_header_only(capsys):
    assert run_cli(["curve", "--beta-grid", "0.7:0.7:0.1"]) == EXIT_OK
    _, header, rows = read_csv_table(capsys.readouterr().out)
    assert header == ("beta", "rho")
    assert rows == []


@pytest.mark.parametrize("argv", [[], ["curve", "--kind", "three-sample"], ["simulate"], ["bogus"]])
def test_usage_errors(argv):
    assert run_cli(argv) == EXIT_USAGE


def test_simulate_json(tmp_path, capsys):
    config = _write(tmp_path, "cfg.json", _experiment())
    assert run_cli(["simulate", "--config", config]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert list(document)[:3] == ["metadata", "stat", "alpha"]
    assert 0.0 <= document["power_hat"] <= 1.0
    assert document["metadata"]["seed"] == 3
    assert document["metadata"]["digest"] == config_digest(document["metadata"]["config"])
    assert document["metadata"]["config"]["stat"] == {"kind": "hc", "gamma0": 0.2}


def test_simulate_seed_override(tmp_path, capsys):
    config = _write(tmp_path, "cfg.json", _experiment())
    assert run_cli(["simulate", "--config", config, "--seed", "99"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["metadata"]["seed"] == 99


def test_output_is_byte_identical_across_runs_and_workers(tmp_path, monkeypatch):
    config = _write(tmp_path, "cfg.json", _experiment(stat="bj"))
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(["simulate", "--config", config, "--out", str(first)]) == EXIT_OK
    monkeypatch.setenv("RAREWEAK_THREADS", "2")
    assert run_cli(["--workers", "2", "simulate", "--config", config, "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()


@pytest.mark.parametrize("overrides", [{"beta": 1.5}, {"sigma": 0}, {"colour": "red"}, {"reps_null": 10}])
def test_config_errors_exit_two(tmp_path, overrides, capsys):
    config = _write(tmp_path, "cfg.json", _experiment(**overrides))
    assert run_cli(["simulate", "--config", config]) == EXIT_CONFIG
    assert capsys.readouterr().out == ""


def test_invalid_json_exit_two(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text('{"model": "direct",', encoding="utf-8")
    assert run_cli(["simulate", "--config", str(path)]) == EXIT_CONFIG
    assert run_cli(["simulate", "--config", str(tmp_path / "missing.json")]) == EXIT_CONFIG


def test_numerical_failure_exit_three(tmp_path):
    config = _write(tmp_path, "cfg.json", _experiment(n=1000, beta=0.01, r=200.0))
    assert run_cli(["simulate", "--config", config]) == EXIT_NUMERICAL


def test_unwritable_output_exit_three(tmp_path):
    out = tmp_path / "no" / "such" / "dir" / "curve.csv"
    assert run_cli(["curve", "--out", str(out)]) == EXIT_NUMERICAL


def test_scan_csv(tmp_path, capsys):
    config = _write(tmp_path, "scan.json", {"model": "direct", "n": 100, "beta_grid": [0.6, 0.8],
                                            "r_grid": [0.2, 0.6], "stats": ["minp"], "reps_null": 100,
                                            "reps_alt": 100, "seed": 5})
    assert run_cli(["scan", "--config", config]) == EXIT_OK
    metadata, header, rows = read_csv_table(capsys.readouterr().out)
    assert header == ("beta", "r", "sigma", "stat", "power", "risk", "rho_theory", "region", "error")
    assert len(rows) == 4
    assert metadata["seed"] == "5"
    assert float(rows[0][6]) == pytest.approx(curves.rho(0.6, 1.0), rel=1e-11)


def test_calibrate_reports_reference(capsys):
    code = run_cli(["calibrate", "--stat", "minp", "--n", "10", "--reps", "500", "--seed", "2"])
    assert code == EXIT_OK
    _, header, rows = read_csv_table(capsys.readouterr().out)
    assert header == ("stat", "model", "n", "alpha", "reps", "threshold", "reference")
    assert rows[0][:2] == ["minp", "direct"]
    assert float(rows[0][6]) == pytest.approx(5.2754, abs=1e-4)


def test_calibrate_rejects_small_reps():
    assert run_cli(["calibrate", "--stat", "hc", "--n", "10", "--reps", "20"]) == EXIT_CONFIG


def test_diagnose(capsys):
    assert run_cli(["diagnose", "--n", "1000000", "--beta", "0.9", "--r", "0.01"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["risk_lower"] >= 0.95
    assert document["heuristic"] is False


def test_diagnose_other_models_are_heuristic(capsys):
    argv = ["diagnose", "--n", "1000", "--beta", "0.7", "--r", "0.3", "--model", "poisson", "--format", "csv"]
    assert run_cli(argv) == EXIT_OK
    _, header, rows = read_csv_table(capsys.readouterr().out)
    assert rows[0][header.index("heuristic")] == "true"


def test_diagnose_domain_error_exit_two():
    assert run_cli(["diagnose", "--n", "0", "--beta", "0.7", "--r", "0.3"]) == EXIT_CONFIG
    assert run_cli(["diagnose", "--n", "10", "--beta", "0.7", "--r", "0.3", "--sigma", "-1"]) == EXIT_CONFIG


def test_emit_header_only_for_empty_table():
    assert emit_table(PhaseTable(), CSV) == b"beta,r,sigma,stat,power,risk,rho_theory,region,error\n"
    assert json.loads(emit_table(PhaseTable(), JSON, {"seed": 1})) == {"metadata": {"seed": 1}, "rows": []}


@pytest.mark.parametrize(
    "value,text",
    [(None, ""), (True, "true"), (3, "3"), (0.1, "0.1"), (1 / 3, "0.333333333333"), (float("nan"), "nan")],
)
def test_format_value(value, text):
    assert format_value(value) == text


def test_calibrate_hc_reports_null_level(capsys):
    assert run_cli(["calibrate", "--stat", "hc", "--n", "1000", "--reps", "200", "--seed", "4"]) == EXIT_OK
    metadata, header, rows = read_csv_table(capsys.readouterr().out)
    assert float(metadata["hc_null_level"]) == pytest.approx(curves.hc_null_level(1000), rel=1e-12)
    assert rows[0][header.index("reference")] == ""


def test_calibrate_minp_has_no_hc_level(capsys):
    assert run_cli(["calibrate", "--stat", "minp", "--n", "1000", "--reps", "100"]) == EXIT_OK
    metadata, _, _ = read_csv_table(capsys.readouterr().out)
    assert "hc_null_level" not in metadata


@pytest.mark.parametrize("kind,two_sample", [("bonferroni", False), ("bonferroni-two-sample", True)])
def test_bonferroni_curve_reports_crossover(capsys, kind, two_sample):
    assert run_cli(["curve", "--kind", kind, "--sigma", "0.8", "--beta-grid", "0.6:0.9:0.1"]) == EXIT_OK
    metadata, _, _ = read_csv_table(capsys.readouterr().out)
    expected = curves.bonferroni_optimal_from(0.8, two_sample=two_sample)
    assert float(metadata["bonferroni_optimal_from"]) == pytest.approx(expected, rel=1e-12)


def test_simulate_csv_has_type1_se(tmp_path, capsys):
    config = _write(tmp_path, "cfg.json", _experiment())
    assert run_cli(["simulate", "--config", config, "--format", "csv"]) == EXIT_OK
    metadata, header, rows = read_csv_table(capsys.readouterr().out)
    assert "type1_se" in header
    assert float(metadata["hc_null_level"]) == pytest.approx(curves.hc_null_level(100), rel=1e-12)
