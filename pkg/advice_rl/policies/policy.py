"""
Exploration policies as configured objects.

A policy is immutable; the only state it reads is the visit count the
student reports for the current state.
"""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from advice_rl.policies.schedules import boltzmann_temperature, glie_epsilon
from advice_rl.policies.selection import (
    TieBreak,
    boltzmann_action,
    boltzmann_probabilities,
    epsilon_greedy_action,
    epsilon_greedy_probabilities,
    greedy_action,
    greedy_probabilities,
    random_greedy_action,
)
from advice_rl.utils.errors import ContractViolation


class Policy(ABC):
    """Maps Q-values (and the state's visit count) to an action."""

    uses_visits: bool = False

    @abstractmethod
    def select(self, q_values: np.ndarray, visits: int, rng: np.random.Generator) -> int:
        """Draw an action."""

    @abstractmethod
    def probabilities(self, q_values: np.ndarray, visits: int) -> np.ndarray:
        """Action distribution the next select() call samples from."""


class GreedyPolicy(Policy):
    def __init__(self, tie_break: TieBreak = "lowest"):
        self.tie_break = tie_break

    def select(self, q_values, visits, rng):
        if self.tie_break == "random":
            return random_greedy_action(q_values, rng)
        return greedy_action(q_values)

    def probabilities(self, q_values, visits):
        return greedy_probabilities(q_values, self.tie_break)


class EpsilonGreedyPolicy(Policy):
    """Fixed epsilon."""

    def __init__(self, epsilon: float, tie_break: TieBreak = "lowest"):
        if not 0.0 <= epsilon <= 1.0:
            raise ContractViolation(f"epsilon must be in [0, 1], got {epsilon}")
        self.epsilon = epsilon
        self.tie_break = tie_break

    def select(self, q_values, visits, rng):
        return epsilon_greedy_action(q_values, self.epsilon, rng, self.tie_break)

    def probabilities(self, q_values, visits):
        return epsilon_greedy_probabilities(q_values, self.epsilon, self.tie_break)


class GlieEpsilonGreedyPolicy(Policy):
    """Epsilon-greedy with epsilon = glie_epsilon(visits of the state)."""

    uses_visits = True

    def __init__(self, c: float = 1.0, tie_break: TieBreak = "lowest"):
        if c <= 0.0:
            raise ContractViolation(f"GLIE constant must be > 0, got {c}")
        self.c = c
        self.tie_break = tie_break

    def select(self, q_values, visits, rng):
        return epsilon_greedy_action(q_values, glie_epsilon(visits, self.c), rng, self.tie_break)

    def probabilities(self, q_values, visits):
        return epsilon_greedy_probabilities(q_values, glie_epsilon(visits, self.c), self.tie_break)


class BoltzmannPolicy(Policy):
    """Softmax exploration; logarithmic cooling when no temperature is fixed."""

    def __init__(self, temperature: Optional[float] = None):
        if temperature is not None and temperature <= 0.0:
            raise ContractViolation(f"temperature must be > 0, got {temperature}")
        self.temperature = temperature
        self.uses_visits = temperature is None

    def _temperature(self, visits: int) -> float:
        return self.temperature if self.temperature is not None else boltzmann_temperature(visits)

    def select(self, q_values, visits, rng):
        return boltzmann_action(q_values, self._temperature(visits), rng)

    def probabilities(self, q_values, visits):
        return boltzmann_probabilities(q_values, self._temperature(visits))
