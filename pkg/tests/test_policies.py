"""Tests for action selection and exploration schedules."""

import math

import numpy as np
import pytest

from advice_rl.policies import (
    BoltzmannPolicy,
    EpsilonGreedyPolicy,
    GlieEpsilonGreedyPolicy,
    GreedyPolicy,
    boltzmann_action,
    boltzmann_probabilities,
    boltzmann_temperature,
    epsilon_greedy_action,
    epsilon_greedy_probabilities,
    glie_epsilon,
    greedy_action,
    greedy_probabilities,
    random_greedy_action,
)
from advice_rl.utils.errors import ContractViolation


def test_greedy_breaks_ties_low():
    assert greedy_action(np.array([1.0, 3.0, 3.0])) == 1


def test_non_finite_q_rejected():
    with pytest.raises(ContractViolation):
        greedy_action(np.array([0.0, np.nan]))


def test_epsilon_zero_is_greedy(rng):
    q = np.array([0.0, 2.0, 1.0])
    assert all(epsilon_greedy_action(q, 0.0, rng) == 1 for _ in range(100))


def test_epsilon_one_is_uniform(rng):
    q = np.array([0.0, 2.0, 1.0])
    counts = np.bincount([epsilon_greedy_action(q, 1.0, rng) for _ in range(30_000)], minlength=3)
    assert np.all(np.abs(counts / 30_000 - 1 / 3) <= 0.01)


def test_epsilon_greedy_frequency(rng):
    q = np.array([0.0, 1.0])
    draws = np.array([epsilon_greedy_action(q, 0.1, rng) for _ in range(100_000)])
    assert abs(draws.mean() - 0.95) <= 0.005


@pytest.mark.parametrize("q", [[1.0, 3.0, 2.0], [5.0, 5.0, 1.0], [0.0], [-2.5, 7.25, 7.0, -1.0]])
def test_greedy_invariant_under_scale_and_shift(q, rng):
    q = np.array(q)
    for _ in range(50):
        c, b = rng.uniform(0.1, 10.0), rng.uniform(-100.0, 100.0)
        assert greedy_action(c * q + b) == greedy_action(q)


def test_random_tie_break_spreads_over_maximizers(rng):
    q = np.array([5.0, 5.0, 1.0])
    counts = np.bincount([random_greedy_action(q, rng) for _ in range(10_000)], minlength=3)
    assert counts[2] == 0
    assert abs(counts[0] / 10_000 - 0.5) <= 0.02
    assert random_greedy_action(np.array([1.0, 3.0, 2.0]), rng) == 1


def test_random_tie_break_probabilities():
    q = np.array([5.0, 5.0, 1.0])
    assert greedy_probabilities(q).tolist() == [1.0, 0.0, 0.0]
    assert greedy_probabilities(q, "random").tolist() == [0.5, 0.5, 0.0]
    assert epsilon_greedy_probabilities(q, 0.3, "random").tolist() == pytest.approx([0.45, 0.45, 0.1])


def test_unknown_tie_break_rejected(rng):
    with pytest.raises(ContractViolation):
        epsilon_greedy_action(np.zeros(2), 0.1, rng, tie_break="highest")


def test_epsilon_greedy_probabilities():
    probabilities = epsilon_greedy_probabilities(np.array([0.0, 1.0]), 0.1)
    assert probabilities.tolist() == pytest.approx([0.05, 0.95])


def test_epsilon_out_of_range(rng):
    with pytest.raises(ContractViolation):
        epsilon_greedy_action(np.zeros(2), 1.5, rng)


def test_boltzmann_equal_q_is_uniform():
    assert boltzmann_probabilities(np.full(4, 7.0), 0.3).tolist() == pytest.approx([0.25] * 4)


def test_boltzmann_handles_large_q():
    probabilities = boltzmann_probabilities(np.array([1000.0, 0.0]), 0.01)
    assert probabilities[0] == pytest.approx(1.0)
    assert np.all(np.isfinite(probabilities))


def test_boltzmann_temperature_must_be_positive():
    with pytest.raises(ContractViolation):
        boltzmann_probabilities(np.zeros(2), 0.0)


def test_boltzmann_sampling_matches_softmax(rng):
    q = np.array([0.0, 1.0])
    draws = np.array([boltzmann_action(q, 1.0, rng) for _ in range(40_000)])
    assert abs(draws.mean() - math.e / (1 + math.e)) <= 0.01


def test_boltzmann_cold_limit_is_greedy(rng):
    q = np.array([0.0, 1.0])
    draws = np.array([boltzmann_action(q, 1e-6, rng) for _ in range(10_000)])
    assert draws.mean() >= 0.999


def test_boltzmann_probabilities_normalized(rng):
    for _ in range(500):
        q = rng.uniform(-5.0, 5.0, size=int(rng.integers(1, 8)))
        temperature = float(np.exp(rng.uniform(np.log(0.1), np.log(10.0))))
        probabilities = boltzmann_probabilities(q, temperature)
        assert abs(probabilities.sum() - 1.0) <= 1e-12
        assert (probabilities > 0.0).all()


class TestSchedules:
    def test_glie_epsilon_values(self):
        assert glie_epsilon(0) == 1.0
        assert glie_epsilon(99) == pytest.approx(0.1)
        assert glie_epsilon(3, c=0.5) == pytest.approx(0.25)

    def test_glie_epsilon_decays_with_divergent_sum(self):
        values = [glie_epsilon(n) for n in range(10_000)]
        assert all(a >= b for a, b in zip(values, values[1:]))
        assert sum(values) > 150

    def test_boltzmann_cooling(self):
        assert boltzmann_temperature(0) == pytest.approx(1.0 / math.log(2))
        assert boltzmann_temperature(100) < boltzmann_temperature(10)

    def test_negative_visits_rejected(self):
        with pytest.raises(ContractViolation):
            glie_epsilon(-1)


class TestPolicyObjects:
    def test_probabilities_match_selection_rule(self):
        q = np.array([0.0, 1.0, 0.5])
        assert GreedyPolicy().probabilities(q, 0).tolist() == [0.0, 1.0, 0.0]
        assert EpsilonGreedyPolicy(0.3).probabilities(q, 0).sum() == pytest.approx(1.0)
        assert GlieEpsilonGreedyPolicy().probabilities(q, 0).tolist() == pytest.approx([1 / 3] * 3)

    def test_random_tie_break_objects(self):
        q = np.array([2.0, 2.0, 0.0])
        assert GreedyPolicy("random").probabilities(q, 0).tolist() == [0.5, 0.5, 0.0]
        assert EpsilonGreedyPolicy(0.3, "random").probabilities(q, 0).tolist() == pytest.approx([0.45, 0.45, 0.1])
        assert GlieEpsilonGreedyPolicy(1.0, "random").probabilities(q, 99).tolist() == pytest.approx(
            [0.1 / 3 + 0.45, 0.1 / 3 + 0.45, 0.1 / 3]
        )

    def test_visit_usage_flags(self):
        assert GlieEpsilonGreedyPolicy().uses_visits
        assert BoltzmannPolicy().uses_visits
        assert not BoltzmannPolicy(temperature=0.5).uses_visits
        assert not EpsilonGreedyPolicy(0.1).uses_visits

    def test_fixed_temperature(self):
        q = np.array([0.0, 1.0])
        probabilities = BoltzmannPolicy(temperature=1.0).probabilities(q, 5)
        assert probabilities[1] == pytest.approx(math.e / (1 + math.e))

    def test_invalid_parameters(self):
        with pytest.raises(ContractViolation):
            EpsilonGreedyPolicy(-0.1)
        with pytest.raises(ContractViolation):
            GlieEpsilonGreedyPolicy(0.0)
        with pytest.raises(ContractViolation):
            BoltzmannPolicy(temperature=-1.0)
