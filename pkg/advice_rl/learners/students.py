"""
Learning agents used by the harness.

A Student owns one estimate (QTable or WeightVector) plus its step-size
schedule, and exposes the few operations the trial loop needs.
"""

from abc import ABC, abstractmethod
from collections import Counter
from typing import Any, List, Optional

import numpy as np

from advice_rl.env.base import FeatureMap, Transition
from advice_rl.learners.linear import WeightVector, q_update_linear, sarsa_update_linear
from advice_rl.learners.schedules import StepSizeSchedule
from advice_rl.learners.tabular import QTable, q_update_tabular, sarsa_update_tabular


class Student(ABC):
    """Common interface of the four learners."""

    on_policy: bool
    gamma: float
    schedule: StepSizeSchedule

    @abstractmethod
    def q_values(self, state: Any) -> np.ndarray:
        """Current action-value estimates at state."""

    @abstractmethod
    def state_visits(self, state: Any) -> int:
        """Number of updates made from state so far."""

    @abstractmethod
    def learn(self, tr: Transition, next_action: Optional[int] = None) -> None:
        """Apply one update; next_action is used only by on-policy learners."""

    @abstractmethod
    def snapshot(self) -> np.ndarray:
        """Copy of the estimate compared by the convergence detector."""

    @property
    def convergence_scale(self) -> float:
        """Factor applied to the convergence threshold."""
        return 1.0

    def greedy_policy(self) -> Optional[List[int]]:
        """Per-state greedy actions when the state space is enumerable."""
        return None


class TabularStudent(Student):
    """Tabular Q-learning (on_policy=False) or Sarsa (on_policy=True)."""

    def __init__(self, n_states: int, n_actions: int, schedule: StepSizeSchedule,
                 gamma: float, on_policy: bool, initial_q: float = 0.0):
        self.q = QTable.filled(n_states, n_actions, initial_q)
        self.schedule = schedule
        self.gamma = gamma
        self.on_policy = on_policy

    def q_values(self, state: int) -> np.ndarray:
        return self.q.values[state]

    def state_visits(self, state: int) -> int:
        return int(self.q.visits[state].sum())

    def learn(self, tr: Transition, next_action: Optional[int] = None) -> None:
        alpha = self.schedule(int(self.q.visits[tr.state, tr.action]))
        if self.on_policy:
            sarsa_update_tabular(self.q, tr, next_action, alpha, self.gamma)
        else:
            q_update_tabular(self.q, tr, alpha, self.gamma)

    def snapshot(self) -> np.ndarray:
        return self.q.values.copy()

    def greedy_policy(self) -> List[int]:
        return [int(a) for a in self.q.values.argmax(axis=1)]


class LinearStudent(Student):
    """Linear Q-learning (on_policy=False) or linear Sarsa (on_policy=True)."""

    def __init__(self, features: FeatureMap, schedule: StepSizeSchedule, gamma: float,
                 on_policy: bool, bound: float, track_state_visits: bool = False,
                 enumerable_states: Optional[int] = None):
        self.w = WeightVector.zeros(features, bound, track_visits=schedule.needs_visits)
        self.schedule = schedule
        self.gamma = gamma
        self.on_policy = on_policy
        self._state_visits: Optional[Counter] = Counter() if track_state_visits else None
        self._enumerable_states = enumerable_states

    def q_values(self, state: Any) -> np.ndarray:
        return self.w.q_values(state)

    def state_visits(self, state: Any) -> int:
        return 0 if self._state_visits is None else self._state_visits[state]

    def learn(self, tr: Transition, next_action: Optional[int] = None) -> None:
        alpha = self.schedule(self.w.visit_count(tr.state, tr.action))
        if self.on_policy:
            sarsa_update_linear(self.w, tr, next_action, alpha, self.gamma)
        else:
            q_update_linear(self.w, tr, alpha, self.gamma)
        if self._state_visits is not None:
            self._state_visits[tr.state] += 1

    def snapshot(self) -> np.ndarray:
        return self.w.theta.copy()

    @property
    def convergence_scale(self) -> float:
        # |Q diff|_inf <= d * |theta diff|_inf for features in [0, 1]
        return 1.0 / self.w.features.dimension

    def greedy_policy(self) -> Optional[List[int]]:
        if self._enumerable_states is None:
            return None
        return [int(self.q_values(s).argmax()) for s in range(self._enumerable_states)]
