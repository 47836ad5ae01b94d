import math

import pytest

from src.engine.phase_scan import NOT_APPLICABLE, phase_scan, run_scan
from src.gof_tests import create_statistic
from src.models.experiment import ScanConfig
from src.models.model_spec import ModelSpec
from src.theory import curves
from src.utils.errors import ConfigError


def _scan(model, beta_grid, r_grid, names, n=100, sigma=1.0, seed=4):
    return phase_scan(model, n, sigma, beta_grid, r_grid, [create_statistic(name) for name in names],
                      alpha=0.05, reps_null=100, reps_alt=100, seed=seed)


def test_one_row_per_cell_and_statistic(direct_model):
    table = _scan(direct_model, [0.55, 0.7, 0.85], [0.1, 0.5, 1.0], ["hc", "minp"])
    assert len(table) == 18
    order = [(row.beta, row.r, row.stat) for row in table.rows]
    assert order[:4] == [(0.55, 0.1, "hc"), (0.55, 0.1, "minp"), (0.55, 0.5, "hc"), (0.55, 0.5, "minp")]
    for row in table.rows:
        assert row.rho_theory == pytest.approx(curves.rho(row.beta, 1.0), abs=1e-12)
        assert row.error is None
        assert not math.isnan(row.risk)


def test_bonferroni_column_only_when_requested(direct_model):
    with_minp = _scan(direct_model, [0.7], [0.5], ["minp"])
    assert "rho_bonf" in with_minp.to_dict()["rows"][0]
    assert with_minp.rows[0].rho_bonf == pytest.approx(curves.rho_bonf(0.7, 1.0))
    only_hc = _scan(direct_model, [0.7], [0.5], ["hc"])
    assert "rho_bonf" not in only_hc.to_dict()["rows"][0]


def test_two_sample_models_use_two_sample_curve():
    table = _scan(ModelSpec(ModelSpec.TWO_SAMPLE_NORMAL), [0.6], [0.5], ["hc"], sigma=0.8)
    assert table.rows[0].rho_theory == pytest.approx(curves.rho_two_sample(0.6, 0.8))


def test_dense_cells_have_no_curve(direct_model):
    row = _scan(direct_model, [0.3], [0.5], ["hc"]).rows[0]
    assert math.isnan(row.rho_theory)
    assert row.region == NOT_APPLICABLE
    assert row.error is None


def test_failed_cell_is_recorded_and_scan_continues(direct_model):
    table = _scan(direct_model, [0.55], [0.5, 200.0], ["hc"], n=1000)
    good, bad = table.rows
    assert good.error is None and not math.isnan(good.power)
    assert bad.error and math.isnan(bad.power)
    assert table.csv_rows()[1][-1] == bad.error


def test_scan_is_reproducible(direct_model):
    first = _scan(direct_model, [0.6, 0.8], [0.3], ["bj"], seed=10)
    again = _scan(direct_model, [0.6, 0.8], [0.3], ["bj"], seed=10)
    assert first.to_dict() == again.to_dict()


def test_empty_inputs_rejected(direct_model):
    with pytest.raises(ConfigError):
        _scan(direct_model, [], [0.5], ["hc"])
    with pytest.raises(ConfigError):
        _scan(direct_model, [0.6], [0.5], [])


def test_run_scan_uses_config():
    scan = ScanConfig.from_dict({"model": "direct", "n": 100, "beta_grid": [0.6, 0.7], "r_grid": [0.2, 0.4],
                                 "stats": ["fdr"], "reps_null": 100, "reps_alt": 100, "seed": 1})
    table = run_scan(scan)
    assert len(table) == 4
    assert table.with_bonferroni


@pytest.mark.parametrize("name", ["hc", "bj"])
def test_power_grows_with_r(direct_model, name):
    r_grid = [0.05, 0.3, 0.8, 1.5, 2.5]
    reps = 200
    table = phase_scan(direct_model, 1000, 1.0, [0.6], r_grid, [create_statistic(name)], alpha=0.05,
                       reps_null=reps, reps_alt=reps, seed=12)
    powers = [row.power for row in table.rows]
    for weaker, stronger in zip(powers, powers[1:]):
        se = math.sqrt((weaker * (1 - weaker) + stronger * (1 - stronger)) / reps)
        assert stronger >= weaker - 3 * max(se, 1 / reps)
    assert powers[-1] > powers[0]
