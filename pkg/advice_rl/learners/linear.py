"""
Linear function approximation: Q(s, a) = theta . phi(s, a).

Both gradient rules move theta along phi(s, a):

    theta <- theta + alpha * phi(s, a) * (r + gamma * B - theta . phi(s, a))

B = max_a' theta . phi(s', a') for Q-learning, theta . phi(s', a') with the
executed next action for Sarsa, and 0 at a terminal s'.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Optional

import numpy as np

from advice_rl.env.base import FeatureMap, Transition
from advice_rl.learners.tabular import check_step_parameters, temporal_difference
from advice_rl.utils.constants import DEFAULT_DIVERGENCE_BOUND
from advice_rl.utils.errors import ContractViolation, DivergenceError


@dataclass
class WeightVector:
    """Parameter vector theta bound to its feature map."""

    theta: np.ndarray
    features: FeatureMap
    bound: float = DEFAULT_DIVERGENCE_BOUND
    # (state, action) update counts; None when no schedule needs them
    visits: Optional[Counter] = field(default=None)

    @classmethod
    def zeros(cls, features: FeatureMap, bound: float = DEFAULT_DIVERGENCE_BOUND,
              track_visits: bool = False) -> "WeightVector":
        return cls(np.zeros(features.dimension), features, bound,
                   Counter() if track_visits else None)

    def __post_init__(self):
        if self.theta.shape != (self.features.dimension,):
            raise ContractViolation(
                f"theta has shape {self.theta.shape}, feature map dimension is "
                f"{self.features.dimension}"
            )

    def visit_count(self, state: Any, action: int) -> int:
        return 0 if self.visits is None else self.visits[(state, action)]

    def q_values(self, state: Any) -> np.ndarray:
        return self.features.all_actions(state) @ self.theta


def q_value_linear(w: WeightVector, state: Any, action: int) -> float:
    """theta . phi(state, action)."""
    phi = w.features(state, action)
    if phi.shape != w.theta.shape:
        raise ContractViolation(
            f"feature vector length {phi.shape[0]} does not match theta length {w.theta.shape[0]}"
        )
    return float(phi @ w.theta)


def _apply(w: WeightVector, tr: Transition, bootstrap: float, alpha: float,
           gamma: float) -> WeightVector:
    phi = w.features(tr.state, tr.action)
    delta = temporal_difference(tr.reward, gamma, bootstrap, float(phi @ w.theta))
    w.theta += alpha * phi * delta
    if w.visits is not None:
        w.visits[(tr.state, tr.action)] += 1

    if not np.all(np.isfinite(w.theta)):
        raise DivergenceError("theta became non-finite")
    peak = float(np.abs(w.theta).max())
    if peak > w.bound:
        raise DivergenceError(f"|theta|_inf = {peak:.3g} exceeds bound {w.bound:.3g}")
    return w


def q_update_linear(w: WeightVector, tr: Transition, alpha: float, gamma: float) -> WeightVector:
    """
    Approximate Q-learning step (in place).

    Raises:
        DivergenceError: theta non-finite or beyond w.bound after the step
    """
    check_step_parameters(alpha, gamma, tr.reward)
    bootstrap = 0.0 if tr.done else float(w.q_values(tr.next_state).max())
    return _apply(w, tr, bootstrap, alpha, gamma)


def sarsa_update_linear(w: WeightVector, tr: Transition, next_action, alpha: float,
                        gamma: float) -> WeightVector:
    """On-policy linear TD step (in place); next_action is the executed one."""
    check_step_parameters(alpha, gamma, tr.reward)
    if tr.done:
        bootstrap = 0.0
    else:
        if next_action is None or not 0 <= next_action < w.features.n_actions:
            raise ContractViolation(f"illegal next action {next_action}")
        bootstrap = q_value_linear(w, tr.next_state, next_action)
    return _apply(w, tr, bootstrap, alpha, gamma)
