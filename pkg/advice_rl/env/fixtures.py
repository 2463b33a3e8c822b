"""
Small finite MDPs with known answers.

Used as configured domains for the linear fixed-point and assumption
checker runs, where the analytic Q* and stationary distribution are known.
Neither ever terminates; a horizon makes the harness cut episodes off.
"""

from typing import List, Optional, Tuple

import numpy as np

from advice_rl.env.base import FiniteMdp

STAY, SWITCH = 0, 1


class SingleStateMdp(FiniteMdp):
    """One non-terminal state, one action, constant reward, self loop."""

    n_states = 1
    n_actions = 1

    def __init__(self, reward: float = 1.0, gamma: float = 0.5, horizon: Optional[int] = None):
        self.reward = reward
        self.max_episode_steps = horizon
        self.r_max = abs(reward)
        self.gamma = gamma

    def reset(self, rng: np.random.Generator) -> int:
        return 0

    def is_terminal(self, state: int) -> bool:
        return False

    def outcomes(self, state: int, action: int) -> List[Tuple[float, int, float]]:
        return [(1.0, 0, self.reward)]


class TwoStateMdp(FiniteMdp):
    """Two non-terminal states; Stay keeps the state, Switch flips it."""

    n_states = 2
    n_actions = 2
    r_max = 1.0

    def __init__(self, gamma: float = 0.9, horizon: Optional[int] = None):
        self.gamma = gamma
        self.max_episode_steps = horizon

    def reset(self, rng: np.random.Generator) -> int:
        return 0

    def is_terminal(self, state: int) -> bool:
        return False

    def outcomes(self, state: int, action: int) -> List[Tuple[float, int, float]]:
        next_state = state if action == STAY else 1 - state
        # Reward 1 for landing in state 1
        return [(1.0, next_state, float(next_state == 1))]
