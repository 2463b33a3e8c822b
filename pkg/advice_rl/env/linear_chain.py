"""
Linear Chain domain.

States 0..N-1 on a line, start at 0, goal at N-1. Right moves one state
up, Left one state down (clamped at 0). Every step costs -1.
"""

from typing import List, Tuple

import numpy as np

from advice_rl.env.base import FiniteMdp, Transition
from advice_rl.utils.constants import CHAIN_LENGTH, CHAIN_STEP_CAP, LEFT, RIGHT
from advice_rl.utils.errors import ContractViolation


def linear_chain_step(state: int, action: int, length: int = CHAIN_LENGTH) -> Transition:
    """
    Take one step on a chain of the given length.

    Args:
        state: Chain index, must be non-terminal (< length - 1)
        action: LEFT (0) or RIGHT (1)
        length: Number of states N

    Returns:
        Transition with reward -1; done iff the goal N-1 is reached
    """
    if not 0 <= state < length - 1:
        raise ContractViolation(f"cannot step from chain state {state} (goal is {length - 1})")

    if action == RIGHT:
        next_state = state + 1
    elif action == LEFT:
        next_state = max(state - 1, 0)
    else:
        raise ContractViolation(f"illegal chain action {action}")

    return Transition(state, action, -1.0, next_state, next_state == length - 1)


class LinearChain(FiniteMdp):
    """Linear Chain MDP with two actions."""

    n_actions = 2
    r_max = 1.0

    def __init__(self, length: int = CHAIN_LENGTH, gamma: float = 0.8,
                 step_cap: int = CHAIN_STEP_CAP):
        if length < 2:
            raise ContractViolation(f"chain length must be >= 2, got {length}")
        self.length = length
        self.n_states = length
        self.gamma = gamma
        self.max_episode_steps = step_cap

    @property
    def goal(self) -> int:
        return self.length - 1

    def reset(self, rng: np.random.Generator) -> int:
        return 0

    def is_terminal(self, state: int) -> bool:
        return state == self.goal

    def step(self, state: int, action: int, rng: np.random.Generator) -> Transition:
        return linear_chain_step(state, action, self.length)

    def outcomes(self, state: int, action: int) -> List[Tuple[float, int, float]]:
        tr = linear_chain_step(state, action, self.length)
        return [(1.0, tr.next_state, tr.reward)]
