"""Tests for the linear-approximation assumption checker."""

from pathlib import Path

import numpy as np
import pytest

from advice_rl.cli.config_file import load_config
from advice_rl.env import GridPursuit, OneHotFeatures, PursuitFeatures, SingleStateMdp, TwoStateMdp
from advice_rl.harness import check_config_assumptions, check_fa_assumptions
from advice_rl.policies import EpsilonGreedyPolicy, GreedyPolicy
from advice_rl.utils.errors import AssumptionError

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_single_state_condition_holds(rng):
    report = check_fa_assumptions(
        SingleStateMdp(gamma=0.9), EpsilonGreedyPolicy(0.1), OneHotFeatures(1, 1), 0.9,
        [np.zeros(1), np.array([3.0])], 100, rng,
    )
    assert report.sigma_pi == [[1.0]]
    assert report.sigma_star == [[[1.0]], [[1.0]]]
    assert report.min_eigenvalues == pytest.approx([1 - 0.81] * 2)
    assert report.verdicts == [True, True]


@pytest.mark.parametrize("gamma", [0.0, 0.5, 0.99])
def test_single_state_any_discount_below_one(rng, gamma):
    report = check_fa_assumptions(SingleStateMdp(), EpsilonGreedyPolicy(0.0), OneHotFeatures(1, 1),
                                  gamma, [np.ones(1)], 10, rng)
    assert report.all_pass


def test_two_state_matches_stationary_distribution(rng):
    report = check_fa_assumptions(
        TwoStateMdp(), EpsilonGreedyPolicy(1.0), OneHotFeatures(2, 2), 0.0,
        [np.zeros(4)], 20_000, rng, burn_in=100,
    )
    sigma = report.sigma_pi_matrix
    assert np.max(np.abs(sigma - 0.25 * np.eye(4))) <= 0.05
    assert np.max(np.abs(sigma - sigma.T)) <= 1e-9
    assert report.verdicts == [True]
    assert report.tv_distance < 0.05


def test_greedy_probe_can_fail(rng):
    report = check_fa_assumptions(
        TwoStateMdp(), EpsilonGreedyPolicy(1.0), OneHotFeatures(2, 2), 0.9,
        [np.zeros(4)], 5_000, rng,
    )
    assert report.verdicts == [False]
    assert report.min_eigenvalues[0] < 0.0


def test_zero_probability_action_rejected(rng):
    with pytest.raises(AssumptionError):
        check_fa_assumptions(TwoStateMdp(), GreedyPolicy(), OneHotFeatures(2, 2), 0.5,
                             [np.zeros(4)], 1_000, rng)


def test_sample_count_floor(rng):
    with pytest.raises(AssumptionError):
        check_fa_assumptions(TwoStateMdp(), EpsilonGreedyPolicy(1.0), OneHotFeatures(2, 2), 0.5,
                             [np.zeros(4)], 159, rng)


def test_probe_dimension_checked(rng):
    with pytest.raises(AssumptionError):
        check_fa_assumptions(TwoStateMdp(), EpsilonGreedyPolicy(1.0), OneHotFeatures(2, 2), 0.5,
                             [np.zeros(3)], 1_000, rng)


def test_pursuit_report_shape(rng):
    game = GridPursuit()
    report = check_fa_assumptions(game, EpsilonGreedyPolicy(0.05), PursuitFeatures(game.maze), 0.999,
                                  [np.zeros(7), rng.normal(size=7)], 490, rng)
    assert report.dimension == 7
    assert len(report.min_eigenvalues) == 2
    assert 0.0 <= report.tv_distance <= 1.0


def test_shipped_fixture_configs():
    assert check_config_assumptions(load_config(CONFIGS / "two_state.cfg")).all_pass
    assert check_config_assumptions(load_config(CONFIGS / "single_state.cfg")).all_pass
