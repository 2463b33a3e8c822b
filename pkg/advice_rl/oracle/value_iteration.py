"""
Ground-truth Q* for finite MDPs by synchronous value iteration.

Each sweep computes Q_new = R + gamma * P V from the previous table,
with V(s') = max_a Q(s', a) and V = 0 at terminal states, and stops once
the sup-norm change falls below the tolerance.
"""

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from advice_rl.env.base import FiniteMdp
from advice_rl.learners.tabular import QTable
from advice_rl.utils.constants import ORACLE_MAX_ITERATIONS, ORACLE_TOLERANCE
from advice_rl.utils.errors import ContractViolation, NonConvergenceError
from advice_rl.utils.logger import logger


@dataclass
class OptimalQ:
    """Value-iteration result."""

    q: QTable
    iterations: int
    residual: float

    @property
    def values(self) -> np.ndarray:
        return self.q.values


def tabulate(mdp: FiniteMdp):
    """
    Dense model of a finite MDP.

    Returns:
        (P, R, terminal): P[s, a, s'] transition probabilities, R[s, a]
        expected immediate reward, terminal[s] boolean mask
    """
    n, m = mdp.n_states, mdp.n_actions
    transitions = np.zeros((n, m, n))
    rewards = np.zeros((n, m))
    terminal = np.array([mdp.is_terminal(s) for s in mdp.states()])

    for s in mdp.states():
        if terminal[s]:
            continue
        for a in range(m):
            for probability, next_state, reward in mdp.outcomes(s, a):
                transitions[s, a, next_state] += probability
                rewards[s, a] += probability * reward
    return transitions, rewards, terminal


def value_iteration(
    mdp: FiniteMdp,
    gamma: Optional[float] = None,
    tol: float = ORACLE_TOLERANCE,
    max_iterations: int = ORACLE_MAX_ITERATIONS,
) -> OptimalQ:
    """
    Solve for Q*.

    Args:
        mdp: Finite MDP
        gamma: Discount; the MDP's own discount when None
        tol: Sup-norm stopping tolerance on consecutive sweeps
        max_iterations: Sweep cap

    Returns:
        OptimalQ with Q* = 0 at terminal states

    Raises:
        ContractViolation: gamma outside [0, 1] or tol not positive
        NonConvergenceError: residual still above tol after max_iterations
    """
    gamma = mdp.gamma if gamma is None else gamma
    if not (math.isfinite(gamma) and 0.0 <= gamma <= 1.0):
        raise ContractViolation(f"gamma must be in [0, 1], got {gamma}")
    if not (math.isfinite(tol) and tol > 0.0):
        raise ContractViolation(f"tol must be > 0, got {tol}")

    transitions, rewards, terminal = tabulate(mdp)
    q = np.zeros_like(rewards)
    residual = math.inf

    for iteration in range(1, max_iterations + 1):
        v = np.where(terminal, 0.0, q.max(axis=1))
        q_new = rewards + gamma * (transitions @ v)
        q_new[terminal] = 0.0
        residual = float(np.abs(q_new - q).max())
        q = q_new
        if residual <= tol:
            logger.debug(f"Value iteration converged in {iteration} sweeps (residual {residual:.3g})")
            table = QTable(q, np.zeros(q.shape, dtype=np.int64))
            return OptimalQ(table, iteration, residual)

    raise NonConvergenceError(
        f"value iteration did not reach tol {tol} in {max_iterations} sweeps "
        f"(residual {residual:.3g})"
    )


def greedy_policy_of(q: QTable) -> np.ndarray:
    """Per-state lowest-index argmax."""
    return q.values.argmax(axis=1)
