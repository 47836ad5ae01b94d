import math

import numpy as np
import pytest
from scipy import stats

from src.gof_tests import (
    STAT_NAMES,
    BerkJones,
    FdrMin,
    Fisher,
    HigherCriticism,
    MinPValue,
    create_statistic,
    evaluate,
    reference_threshold,
    statistic_from_dict,
)
from src.models.pvalue_vector import PValueVector
from src.utils.errors import ConfigError, DomainError, NumericalError


def test_hc_examples():
    assert HigherCriticism(1.0).compute([0.5]).oriented == pytest.approx(1.0)
    result = HigherCriticism(1.0).compute([0.1, 0.2, 0.6, 0.9])
    assert result.oriented == pytest.approx(1.5)
    assert result.details["index"] == 2
    assert HigherCriticism(0.5).compute([0.9, 0.6, 0.2, 0.1]).oriented == pytest.approx(1.5)


def test_hc_skips_degenerate_terms():
    result = HigherCriticism(1.0).compute(PValueVector([0.0, 0.5], allow_zero=True))
    assert result.details["skipped"] == 1
    assert result.oriented == pytest.approx(math.sqrt(2) * (1.0 - 0.5) / 0.5)
    assert HigherCriticism(1.0).compute([1.0, 1.0]).oriented == -math.inf


@pytest.mark.parametrize("gamma0", [0.0, -0.1, 1.5])
def test_hc_gamma0_domain(gamma0):
    with pytest.raises(DomainError):
        HigherCriticism(gamma0)


def _naive_hc(pvalues, gamma0):
    ordered = sorted(pvalues)
    n = len(ordered)
    cap = max(1, min(n, math.ceil(round(n * gamma0, 9))))
    best = -math.inf
    for i in range(1, cap + 1):
        p = ordered[i - 1]
        if 0 < p < 1:
            best = max(best, math.sqrt(n) * (i / n - p) / math.sqrt(p * (1 - p)))
    return best


def test_hc_matches_naive_evaluation():
    rng = np.random.default_rng(17)
    for _ in range(100):
        n = int(rng.integers(1, 201))
        pvalues = rng.random(n) ** rng.uniform(1, 4)
        pvalues = np.where(pvalues == 0, 0.5, pvalues)
        gamma0 = float(rng.choice([0.1, 0.2, 0.5, 1.0]))
        assert HigherCriticism(gamma0).compute(pvalues).oriented == _naive_hc(list(pvalues), gamma0)


def test_hc_stronger_evidence_never_lowers_statistic():
    rng = np.random.default_rng(3)
    for _ in range(200):
        n = int(rng.integers(2, 21))
        pvalues = rng.uniform(0.001, 0.999, n)
        stat = HigherCriticism(float(rng.choice([0.2, 1.0])))
        before = stat.compute(pvalues).oriented
        i = int(rng.integers(0, n))
        stronger = pvalues.copy()
        stronger[i] = pvalues[i] * rng.uniform(0.01, 1.0)
        assert stat.compute(stronger).oriented >= before - 1e-12


@pytest.mark.parametrize(
    "pvalues,raw",
    [([0.4], 0.4), ([0.2, 0.9], 0.19), ([0.5], 0.5)],
)
def test_bj_examples(pvalues, raw):
    result = BerkJones().compute(pvalues)
    assert result.raw == pytest.approx(raw, abs=1e-12)
    assert result.oriented == pytest.approx(-math.log(raw))


def test_bj_side_reported():
    assert BerkJones().compute([0.2, 0.9]).details["side"] == "upper"
    assert BerkJones().compute([0.001, 0.5]).details["side"] == "lower"


def test_bj_marginals_uniform_under_null():
    n = 50
    rng = np.random.default_rng(99)
    bj = BerkJones()
    marginals = np.array([bj.order_pvalues(np.sort(rng.random(n)))[0] for _ in range(5000)])
    worst = min(stats.kstest(marginals[:, i], "uniform").pvalue for i in range(n))
    # corrección de Bonferroni sobre los n índices
    assert worst > 0.01 / n


@pytest.mark.parametrize("pvalues,expected", [([1.0, 1.0], 0.0), ([0.5, 0.01], -math.log(0.01))])
def test_minp_examples(pvalues, expected):
    assert MinPValue().compute(pvalues).oriented == pytest.approx(expected)


def test_minp_reference_threshold():
    assert MinPValue().reference_threshold(10, 0.05) == pytest.approx(-math.log(1 - 0.95 ** 0.1), rel=1e-12)


@pytest.mark.parametrize("pvalues,raw", [([0.5, 0.01], 0.02), ([1.0, 1.0, 1.0], 1.0), ([0.3], 0.3)])
def test_fdr_examples(pvalues, raw):
    result = FdrMin().compute(pvalues)
    assert result.raw == pytest.approx(raw)
    assert result.oriented == pytest.approx(-math.log(raw))


def test_fisher_examples():
    assert Fisher().compute([1.0]).oriented == 0.0
    assert Fisher().compute([math.exp(-1), math.exp(-2)]).oriented == pytest.approx(6.0)
    assert Fisher().reference_threshold(1, 0.05) == pytest.approx(-2 * math.log(0.05))


def test_fisher_zero_pvalue_is_numerical_error():
    with pytest.raises(NumericalError):
        Fisher().compute(PValueVector([0.0, 0.4], allow_zero=True))


def test_fisher_null_moments():
    n, reps = 50, 4000
    rng = np.random.default_rng(12)
    values = np.array([Fisher().compute(1.0 - rng.random(n)).oriented for _ in range(reps)])
    assert abs(values.mean() - 2 * n) <= 4 * math.sqrt(4 * n / reps)
    assert abs(values.var() - 4 * n) <= 4 * 4 * n * math.sqrt(2 / reps)


@pytest.mark.parametrize("name", STAT_NAMES)
def test_statistics_are_permutation_invariant(name):
    rng = np.random.default_rng(1)
    pvalues = rng.random(40) + 1e-9
    stat = create_statistic(name)
    shuffled = rng.permutation(pvalues)
    assert stat.compute(pvalues).oriented == stat.compute(shuffled).oriented


@pytest.mark.parametrize("name", STAT_NAMES)
def test_compute_does_not_touch_input(name):
    pvalues = np.array([0.7, 0.1, 0.4])
    create_statistic(name).compute(pvalues)
    np.testing.assert_array_equal(pvalues, [0.7, 0.1, 0.4])


def test_empty_vector_is_domain_error():
    with pytest.raises(DomainError):
        MinPValue().compute([])


def test_evaluate_dispatch():
    assert evaluate(create_statistic("fisher"), [1.0]).oriented == 0.0
    assert evaluate(create_statistic("minp"), [0.5, 0.01]).oriented == pytest.approx(4.60517, abs=1e-5)
    assert evaluate(create_statistic("hc", 1.0), [0.1, 0.2, 0.6, 0.9]).oriented == pytest.approx(1.5)
    assert reference_threshold(create_statistic("hc"), 100, 0.05) is None


def test_statistic_from_dict():
    assert statistic_from_dict("bj") == BerkJones()
    assert statistic_from_dict({"kind": "hc", "gamma0": 0.1}).gamma0 == 0.1
    assert statistic_from_dict({"kind": "hc"}).to_dict() == {"kind": "hc", "gamma0": 0.2}
    with pytest.raises(ConfigError) as info:
        statistic_from_dict({"kind": "minp", "gamma0": 0.1})
    assert info.value.field == "stat.gamma0"
    with pytest.raises(ConfigError):
        statistic_from_dict({"name": "hc"})
