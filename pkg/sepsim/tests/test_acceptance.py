"""
Finite-n statistical checks of the separability laws.

These run full Monte Carlo experiments; skip them with ``-m "not slow"``.
"""

import math

import numpy as np
import pytest
from scipy.stats import binom
from numpy.testing import assert_equal, assert_

import sepsim as ss

Z99 = 2.5758293035489004


@pytest.mark.slow
def test_grid_full_phase_transition():
    "grid full separability below and above n ln n; same CSV on 1 or 8 jobs"
    n = 500
    m_lo = int(math.ceil(n * (math.log(n) - 2)))
    m_hi = int(math.ceil(n * (math.log(n) + 5)))
    spec = ss.ExperimentSpec('grid-full', trials=ss.TRIALS_PHASE, seed=0,
                             n=n)
    one = ss.sweep(spec, 'm', [m_lo, m_hi], n_jobs=1)
    eight = ss.sweep(spec, 'm', [m_lo, m_hi], n_jobs=8)
    assert_equal(one.to_csv(), eight.to_csv())
    assert_(one.estimate[0] <= 0.02, 'too many successes below threshold')
    assert_(one.estimate[1] >= 0.97, 'too few successes above threshold')
    assert_(ss.coupon_all_collected_prob(n, m_hi) > 0.99, 'exact value')
    assert_(ss.coupon_all_collected_prob(n, m_lo) < 1e-3, 'exact value')


@pytest.mark.slow
def test_grid_partial():
    "at least 900 of 1000 grid targets identifiable with n ln 100 sensors"
    scenario = ss.grid_partial(1000, alpha=0.9, beta=0.9)
    assert_equal(scenario.sensors(), 4606)
    spec = ss.ExperimentSpec(scenario, trials=ss.TRIALS_PHASE, seed=0)
    est = ss.estimate(spec, n_jobs=1)
    assert_(est.estimate[0] >= 0.9, 'partial separability too rare')


@pytest.mark.slow
def test_min_spacing_law():
    "exact min spacing probability lies in the 99% Wilson interval"
    scenario = ss.min_spacing(100)
    spec = ss.ExperimentSpec(scenario, trials=ss.TRIALS_BOUND, seed=0)
    est = ss.estimate(spec, n_jobs=1)
    successes = int(est.df['successes'][0])
    low, high = ss.wilson_interval(successes, ss.TRIALS_BOUND, z=Z99)
    p = scenario.closed_form()
    assert_(low <= p <= high, 'exact value outside the Wilson interval')


@pytest.mark.slow
def test_adversarial_majority():
    "flip adversaries: all verdicts correct often; correct iff Q > 0"
    n = 300
    trials = 500
    scenario = ss.adversarial_full(n, gamma=0.2, eps=0.5, policy='flip')
    layout = ss.grid_layout(n)
    model = scenario.model
    intensity = scenario.sensors()
    radius = scenario.radius()
    lam = intensity / n
    all_correct = 0
    positive = 0
    for k in range(trials):
        rng = ss.trial_rng(0, k)
        config = ss.TargetConfiguration.random(n, 0.5, rng)
        field = ss.deploy_adversarial_field(intensity, layout.region, radius,
                                            model, rng)
        cmap = ss.coverage_map(layout, field)
        reports = ss.reported_observations(field, layout, config, model, rng)
        verdicts = ss.majority_decode(reports, cmap, field)
        correct = verdicts.correct(config)
        q = verdicts.margins
        assert_equal(correct, q > 0)
        all_correct += correct.all()
        positive += (q > 0).sum()
        if k < 3:
            same = scenario.trial(ss.trial_rng(0, k))
            assert_equal(same, bool(correct.all()))
    assert_(all_correct / float(trials) >= 0.9, 'too few full recoveries')
    bound = ss.chernoff_success_bound(0.2, lam)
    total = n * trials
    freq = positive / float(total)
    se = math.sqrt(max(bound * (1 - bound), 1e-12) / total)
    assert_(freq >= bound - 3 * se, 'per-target success below bound')
    assert_(ss.adversarial_full_success_bound(n, 0.2, lam) > 0.9, 'bound')


@pytest.mark.slow
def test_grid_full_2d():
    "2d grid full separability above the threshold"
    scenario = ss.grid_full(400, dimension=2, c=4)
    assert_equal(scenario.sensors(), 5212)
    spec = ss.ExperimentSpec(scenario, trials=ss.TRIALS_PHASE, seed=0)
    est = ss.estimate(spec, n_jobs=1)
    assert_(est.estimate[0] >= 0.95, 'too few full recoveries in 2d')


@pytest.mark.slow
def test_bound_sandwich_draws():
    "reverse markov bounds hold on 10^4 random draws"
    rng = ss.trial_rng(50, 0)
    n = rng.integers(1, 200, size=10 ** 4)
    p = rng.random(10 ** 4)
    alpha = rng.uniform(0.01, 0.99, size=10 ** 4)
    exact = binom.sf(np.floor(alpha * n), n, p)
    for i in range(10 ** 4):
        lo, hi = ss.bernoulli_partial_bounds(p[i], alpha[i])
        assert_(lo <= exact[i] + 1e-12, 'lower bound violated')
        assert_(exact[i] <= hi + 1e-12, 'upper bound violated')


@pytest.mark.slow
def test_estimator_consistency():
    "95% Wilson intervals cover the exact value in at least 90% of runs"
    runs = 100
    scenarios = [ss.min_spacing(20), ss.coupon(20, c=0.0),
                 ss.spacing_tail_scenario(20, v1=0.01, v2=0.01)]
    for scenario in scenarios:
        p = scenario.closed_form()
        covered = 0
        for seed in range(runs):
            spec = ss.ExperimentSpec(scenario, trials=ss.TRIALS_PHASE,
                                     seed=seed)
            est = ss.estimate(spec, n_jobs=1)
            covered += est.ci_low[0] <= p <= est.ci_high[0]
        rate = covered / float(runs)
        assert_(rate >= 0.9, '{} coverage {}'.format(scenario.name, rate))


def half_widths(est):
    return (est.ci_high - est.ci_low) / 2.0


@pytest.mark.slow
def test_grid_full_m_sweep_increasing():
    "grid full success does not drop as m grows through n ln n"
    n = 500
    values = [int(math.ceil(n * (math.log(n) + c))) for c in (-5, 0, 5)]
    spec = ss.ExperimentSpec('grid-full', trials=200, seed=3, n=n)
    est = ss.sweep(spec, 'm', values)
    y = est.estimate
    hw = half_widths(est)
    for i in range(len(values) - 1):
        slack = 2 * max(hw[i], hw[i + 1])
        assert_(y[i + 1] >= y[i] - slack, 'success fell as m grew')
    assert_(y[-1] > y[0], 'no transition across the sweep')


@pytest.mark.slow
def test_adversarial_gamma_sweep_decreasing():
    "full majority recovery does not improve as gamma grows"
    n = 100
    spec = ss.ExperimentSpec('adversarial-full', trials=200, seed=4, n=n,
                             m=40.0 * n)
    est = ss.sweep(spec, 'gamma', [0.1, 0.2, 0.3, 0.4])
    y = est.estimate
    hw = half_widths(est)
    for i in range(len(y) - 1):
        slack = 2 * max(hw[i], hw[i + 1])
        assert_(y[i + 1] <= y[i] + slack, 'success rose with gamma')
    assert_(y[0] > y[-1], 'no decline across the sweep')
