"""Policies package: greedy, epsilon-greedy, Boltzmann and GLIE schedules."""

from .policy import (
    BoltzmannPolicy,
    EpsilonGreedyPolicy,
    GlieEpsilonGreedyPolicy,
    GreedyPolicy,
    Policy,
)
from .schedules import boltzmann_temperature, glie_epsilon
from .selection import (
    TieBreak,
    boltzmann_action,
    boltzmann_probabilities,
    epsilon_greedy_action,
    epsilon_greedy_probabilities,
    greedy_action,
    greedy_probabilities,
    random_greedy_action,
)

__all__ = [
    'BoltzmannPolicy', 'EpsilonGreedyPolicy', 'GlieEpsilonGreedyPolicy',
    'GreedyPolicy', 'Policy',
    'boltzmann_temperature', 'glie_epsilon',
    'TieBreak', 'boltzmann_action', 'boltzmann_probabilities', 'epsilon_greedy_action',
    'epsilon_greedy_probabilities', 'greedy_action', 'greedy_probabilities',
    'random_greedy_action',
]
