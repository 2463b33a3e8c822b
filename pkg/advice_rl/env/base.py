"""
MDP abstraction shared by every domain.

Environments are static structure only: episode state is an immutable
value passed to and returned from step(), and all randomness comes from a
generator supplied by the caller.
"""

from abc import ABC, abstractmethod
from typing import Any, Hashable, List, NamedTuple, Optional, Tuple

import numpy as np

from advice_rl.utils.errors import ContractViolation


class Transition(NamedTuple):
    """One environment step (s, a, r, s', done)."""

    state: Any
    action: int
    reward: float
    next_state: Any
    done: bool


class Mdp(ABC):
    """Episodic MDP with a finite action set shared by all states."""

    n_actions: int
    gamma: float
    r_max: float
    # Episodes longer than this are cut off by the harness; None = no cap
    max_episode_steps: Optional[int] = None

    @abstractmethod
    def reset(self, rng: np.random.Generator) -> Any:
        """Return the start state of a new episode."""

    @abstractmethod
    def step(self, state: Any, action: int, rng: np.random.Generator) -> Transition:
        """Advance one step from a non-terminal state."""

    @abstractmethod
    def is_terminal(self, state: Any) -> bool:
        """True if no further transitions are emitted from state."""

    def check_action(self, action: int) -> None:
        if not 0 <= int(action) < self.n_actions:
            raise ContractViolation(
                f"illegal action {action}; expected 0..{self.n_actions - 1}"
            )

    def mixing_key(self, state: Any) -> Hashable:
        """Coarse state key used by the ergodicity proxy."""
        return state


class FiniteMdp(Mdp):
    """MDP whose states are the integers 0..n_states-1."""

    n_states: int

    def states(self) -> range:
        return range(self.n_states)

    @abstractmethod
    def outcomes(self, state: int, action: int) -> List[Tuple[float, int, float]]:
        """
        Transition distribution of a non-terminal (state, action).

        Returns:
            List of (probability, next_state, reward)
        """

    def step(self, state: int, action: int, rng: np.random.Generator) -> Transition:
        if self.is_terminal(state):
            raise ContractViolation(f"cannot step from terminal state {state}")
        self.check_action(action)

        outcomes = self.outcomes(state, action)
        if len(outcomes) == 1:
            _, next_state, reward = outcomes[0]
        else:
            probabilities = np.array([p for p, _, _ in outcomes])
            pick = int(rng.choice(len(outcomes), p=probabilities))
            _, next_state, reward = outcomes[pick]

        return Transition(state, int(action), float(reward), next_state,
                          self.is_terminal(next_state))


class FeatureMap(ABC):
    """Feature function phi(s, a) of fixed dimension with values in [0, 1]."""

    dimension: int
    n_actions: int

    @abstractmethod
    def __call__(self, state: Any, action: int) -> np.ndarray:
        """Feature vector of length `dimension`."""

    def all_actions(self, state: Any) -> np.ndarray:
        """Feature matrix with one row per action."""
        return np.stack([self(state, a) for a in range(self.n_actions)])


class OneHotFeatures(FeatureMap):
    """Indicator of the (state, action) pair of a finite MDP."""

    def __init__(self, n_states: int, n_actions: int):
        self.n_states = n_states
        self.n_actions = n_actions
        self.dimension = n_states * n_actions
        self._basis = np.eye(self.dimension)

    def __call__(self, state: int, action: int) -> np.ndarray:
        return self._basis[int(state) * self.n_actions + int(action)]

    def all_actions(self, state: int) -> np.ndarray:
        start = int(state) * self.n_actions
        return self._basis[start:start + self.n_actions]
