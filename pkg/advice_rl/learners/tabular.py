"""
Tabular Q-learning and Sarsa.

Both rules move one entry Q(s, a) toward a bootstrapped target:

    Q(s, a) <- Q(s, a) + alpha * (r + gamma * B - Q(s, a))

with B = max_a' Q(s', a') for Q-learning and B = Q(s', a') for Sarsa,
where a' is the action that will actually be executed. A terminal s'
contributes B = 0.
"""

import math
from dataclasses import dataclass
from typing import NewType

import numpy as np

from advice_rl.env.base import Transition
from advice_rl.utils.errors import ContractViolation, DivergenceError

TdError = NewType("TdError", float)


@dataclass
class QTable:
    """Dense Q estimate with per-(state, action) visit counters."""

    values: np.ndarray
    visits: np.ndarray

    @classmethod
    def zeros(cls, n_states: int, n_actions: int) -> "QTable":
        return cls.filled(n_states, n_actions, 0.0)

    @classmethod
    def filled(cls, n_states: int, n_actions: int, value: float) -> "QTable":
        """Every entry set to value, no visits."""
        if not math.isfinite(value):
            raise ContractViolation(f"initial Q-value must be finite, got {value}")
        return cls(
            values=np.full((n_states, n_actions), float(value)),
            visits=np.zeros((n_states, n_actions), dtype=np.int64),
        )

    @property
    def n_states(self) -> int:
        return self.values.shape[0]

    @property
    def n_actions(self) -> int:
        return self.values.shape[1]

    def copy(self) -> "QTable":
        return QTable(self.values.copy(), self.visits.copy())


def check_step_parameters(alpha: float, gamma: float, reward: float) -> None:
    """Reject out-of-range or non-finite update parameters."""
    if not (math.isfinite(alpha) and 0.0 <= alpha <= 1.0):
        raise ContractViolation(f"alpha must be in [0, 1], got {alpha}")
    if not (math.isfinite(gamma) and 0.0 <= gamma <= 1.0):
        raise ContractViolation(f"gamma must be in [0, 1], got {gamma}")
    if not math.isfinite(reward):
        raise ContractViolation(f"reward must be finite, got {reward}")


def temporal_difference(reward: float, gamma: float, bootstrap: float,
                        estimate: float) -> TdError:
    """Delta = r + gamma * B - current estimate."""
    return TdError(reward + gamma * bootstrap - estimate)


def _apply(q: QTable, tr: Transition, bootstrap: float, alpha: float, gamma: float) -> QTable:
    s, a = tr.state, tr.action
    delta = temporal_difference(tr.reward, gamma, bootstrap, q.values[s, a])
    q.values[s, a] += alpha * delta
    q.visits[s, a] += 1
    if not math.isfinite(q.values[s, a]):
        raise DivergenceError(f"Q({s}, {a}) became non-finite")
    return q


def q_update_tabular(q: QTable, tr: Transition, alpha: float, gamma: float) -> QTable:
    """
    Q-learning update of the entry tr.state, tr.action (in place).

    Args:
        q: Table to update
        tr: Observed transition
        alpha: Step size in [0, 1]
        gamma: Discount in [0, 1]

    Returns:
        The updated table
    """
    check_step_parameters(alpha, gamma, tr.reward)
    bootstrap = 0.0 if tr.done else float(q.values[tr.next_state].max())
    return _apply(q, tr, bootstrap, alpha, gamma)


def sarsa_update_tabular(q: QTable, tr: Transition, next_action, alpha: float,
                         gamma: float) -> QTable:
    """
    Sarsa update of the entry tr.state, tr.action (in place).

    next_action is the action executed at tr.next_state, after any advice;
    it is ignored when tr.done.
    """
    check_step_parameters(alpha, gamma, tr.reward)
    if tr.done:
        bootstrap = 0.0
    else:
        if next_action is None or not 0 <= next_action < q.n_actions:
            raise ContractViolation(f"illegal next action {next_action}")
        bootstrap = float(q.values[tr.next_state, next_action])
    return _apply(q, tr, bootstrap, alpha, gamma)
