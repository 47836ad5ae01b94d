"""
Estudios de Monte Carlo a escala completa. Se excluyen por defecto; correr con
pytest -m slow.
"""

import math

import numpy as np
import pytest
from scipy import stats

from src.engine.monte_carlo import calibrate_threshold, estimate_power
from src.gof_tests import STAT_NAMES, create_statistic
from src.models.calibration import Calibration
from src.models.experiment import ExperimentConfig
from src.models.model_spec import Hypothesis, ModelSpec
from src.samplers import sample_pvalues
from src.theory import curves
from src.theory.hellinger import indistinguishability_bound

pytestmark = pytest.mark.slow


def _experiment(stat, n, beta, r, reps_null, reps_alt, seed=0, sigma=1.0):
    return ExperimentConfig(ModelSpec(ModelSpec.DIRECT), Calibration(n, beta, r, sigma), create_statistic(stat),
                            reps_null=reps_null, reps_alt=reps_alt, seed=seed)


def test_closed_form_null_thresholds():
    reps = 10 ** 5
    model = ModelSpec(ModelSpec.DIRECT)
    fisher = calibrate_threshold(create_statistic("fisher"), model, Calibration(1, 0.5, 0.0), 0.05, reps, seed=1)
    se = math.sqrt(0.05 * 0.95 / reps) / (0.5 * 0.05)
    assert abs(fisher - 5.9915) <= 3 * se

    minp = calibrate_threshold(create_statistic("minp"), model, Calibration(10, 0.5, 0.0), 0.05, reps, seed=2)
    t = 1 - 0.95 ** 0.1
    # densidad de -log p_(1) en el cuantil
    density = 10 * (1 - t) ** 9 * t
    assert abs(minp - 5.2754) <= 3 * math.sqrt(0.05 * 0.95 / reps) / density


@pytest.mark.parametrize("spec", [ModelSpec(ModelSpec.DIRECT), ModelSpec(ModelSpec.ONE_SAMPLE_NORMAL),
                                  ModelSpec(ModelSpec.TWO_SAMPLE_NORMAL),
                                  ModelSpec(ModelSpec.ONE_SAMPLE_POISSON, lam=50.0)])
def test_null_models_pass_uniformity(spec):
    cal = Calibration(10 ** 4, 0.7, 1.0)
    passed = sum(
        stats.kstest(sample_pvalues(spec, cal, Hypothesis.NULL, seed=123, rep_index=k).values, "uniform").pvalue
        > 0.01
        for k in range(100)
    )
    assert passed >= 97


@pytest.mark.parametrize("stat", STAT_NAMES)
def test_type1_control(stat):
    estimate = estimate_power(_experiment(stat, 10 ** 4, 0.7, 0.5, 5000, 100, seed=5))
    assert abs(estimate.type1_hat - 0.05) <= 0.015


def test_detectability_separation():
    hc = estimate_power(_experiment("hc", 10 ** 5, 0.6, 0.8, 200, 200, seed=6))
    bj = estimate_power(_experiment("bj", 10 ** 5, 0.6, 0.8, 200, 200, seed=6))
    assert hc.power_hat >= 0.90
    assert bj.power_hat >= 0.85
    for stat in STAT_NAMES:
        assert estimate_power(_experiment(stat, 10 ** 5, 0.6, 0.01, 200, 200, seed=7)).risk_hat >= 0.80


def test_deep_undetectable_cell_has_high_risk():
    estimate = estimate_power(_experiment("hc", 10 ** 5, 0.9, 0.001, 200, 200, seed=14))
    assert estimate.risk_hat >= 0.9


def test_fisher_powerless_in_sparse_regime():
    hc = estimate_power(_experiment("hc", 10 ** 5, 0.75, 1.2, 400, 400, seed=8))
    fisher = estimate_power(_experiment("fisher", 10 ** 5, 0.75, 1.2, 400, 400, seed=8))
    assert hc.power_hat >= 0.90
    assert fisher.power_hat <= 0.15


def test_bonferroni_suboptimal_at_moderate_sparsity():
    hc_power, minp_power = [], []
    for k, beta in enumerate((0.55, 0.60, 0.65)):
        r = 0.5 * (curves.rho(beta, 1.0) + curves.rho_bonf(beta, 1.0))
        hc = estimate_power(_experiment("hc", 10 ** 5, beta, r, 400, 400, seed=20 + k))
        minp = estimate_power(_experiment("minp", 10 ** 5, beta, r, 400, 400, seed=20 + k))
        fdr = estimate_power(_experiment("fdr", 10 ** 5, beta, r, 400, 400, seed=20 + k))
        pooled = math.sqrt(minp.mc_se ** 2 + fdr.mc_se ** 2)
        assert abs(minp.power_hat - fdr.power_hat) <= 3 * max(pooled, 1 / 400)
        hc_power.append(hc)
        minp_power.append(minp)
    pooled = math.sqrt(sum(e.mc_se ** 2 for e in hc_power + minp_power)) / 3
    assert np.mean([e.power_hat for e in hc_power]) >= np.mean([e.power_hat for e in minp_power]) - 2 * pooled


def test_information_bound_not_beaten():
    cal = Calibration(10 ** 6, 0.9, 0.01)
    report = indistinguishability_bound(cal)
    assert report.risk_lower >= 0.95
    hc = estimate_power(_experiment("hc", 10 ** 6, 0.9, 0.01, 100, 100, seed=9))
    assert hc.risk_hat >= report.risk_lower - 0.05 - 3 * hc.mc_se
