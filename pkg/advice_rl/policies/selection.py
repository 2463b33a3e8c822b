"""
Action selection rules.

Ties go to the lowest action index unless a rule is asked to break them
at random, and every random choice draws from the generator passed in
by the caller.
"""

import math
from typing import Literal, Optional

import numpy as np

from advice_rl.utils.errors import ContractViolation

TieBreak = Literal["lowest", "random"]


def _check_q_values(q_values: np.ndarray) -> np.ndarray:
    q = np.asarray(q_values, dtype=float)
    if q.ndim != 1 or q.size == 0:
        raise ContractViolation("q_values must be a non-empty vector")
    if not np.all(np.isfinite(q)):
        raise ContractViolation(f"q_values must be finite, got {q}")
    return q


def _check_tie_break(tie_break: str) -> None:
    if tie_break not in ("lowest", "random"):
        raise ContractViolation(f"tie_break must be 'lowest' or 'random', got {tie_break!r}")


def greedy_action(q_values: np.ndarray) -> int:
    """Lowest-index maximizer of q_values."""
    return int(np.argmax(_check_q_values(q_values)))


def _greedy(q: np.ndarray, tie_break: str, rng: Optional[np.random.Generator]) -> int:
    if tie_break == "lowest":
        return int(np.argmax(q))
    best = np.flatnonzero(q == q.max())
    if best.size == 1:
        return int(best[0])
    return int(rng.choice(best))


def random_greedy_action(q_values: np.ndarray, rng: np.random.Generator) -> int:
    """Uniform choice among the maximizers of q_values."""
    return _greedy(_check_q_values(q_values), "random", rng)


def greedy_probabilities(q_values: np.ndarray, tie_break: TieBreak = "lowest") -> np.ndarray:
    q = _check_q_values(q_values)
    _check_tie_break(tie_break)
    probabilities = np.zeros(q.size)
    if tie_break == "lowest":
        probabilities[int(np.argmax(q))] = 1.0
    else:
        best = np.flatnonzero(q == q.max())
        probabilities[best] = 1.0 / best.size
    return probabilities


def epsilon_greedy_action(q_values: np.ndarray, epsilon: float, rng: np.random.Generator,
                          tie_break: TieBreak = "lowest") -> int:
    """Uniform random action with probability epsilon, greedy otherwise."""
    q = _check_q_values(q_values)
    if not 0.0 <= epsilon <= 1.0:
        raise ContractViolation(f"epsilon must be in [0, 1], got {epsilon}")
    _check_tie_break(tie_break)
    if rng.random() < epsilon:
        return int(rng.integers(q.size))
    return _greedy(q, tie_break, rng)


def epsilon_greedy_probabilities(q_values: np.ndarray, epsilon: float,
                                 tie_break: TieBreak = "lowest") -> np.ndarray:
    q = _check_q_values(q_values)
    return epsilon / q.size + (1.0 - epsilon) * greedy_probabilities(q, tie_break)


def boltzmann_probabilities(q_values: np.ndarray, temperature: float) -> np.ndarray:
    """Softmax of q / T with max subtraction."""
    q = _check_q_values(q_values)
    if not (math.isfinite(temperature) and temperature > 0.0):
        raise ContractViolation(f"temperature must be > 0, got {temperature}")
    weights = np.exp((q - q.max()) / temperature)
    return weights / weights.sum()


def boltzmann_action(q_values: np.ndarray, temperature: float, rng: np.random.Generator) -> int:
    """Sample an action with probability proportional to exp(q / T)."""
    probabilities = boltzmann_probabilities(q_values, temperature)
    return int(rng.choice(probabilities.size, p=probabilities))
