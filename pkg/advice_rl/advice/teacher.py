"""
Budgeted teacher.

The teacher watches the action the student intends to take, may replace
it with its own choice, and pays one budget unit per replacement. The
student must execute any advised action.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, List, Optional, Union

import numpy as np

from advice_rl.learners.tabular import QTable
from advice_rl.utils.errors import ContractViolation

QSource = Callable[[Any], np.ndarray]


class TeacherQuality(str, Enum):
    CORRECT = "correct"
    RANDOM = "random"
    POOR = "poor"
    NONE = "none"


class AdviceStrategy(str, Enum):
    MISTAKE_CORRECTING = "mistake"
    EARLY_ADVISING = "early"


@dataclass(frozen=True)
class AdviceEvent:
    """One issued piece of advice."""

    episode: int
    step: int
    state: Any
    intended: int
    advised: int


@dataclass
class Teacher:
    """Advice source with quality, strategy and remaining budget."""

    quality: TeacherQuality
    strategy: AdviceStrategy
    budget: int
    n_actions: int
    q_source: Optional[QSource] = None
    rng: Optional[np.random.Generator] = None
    remaining: int = -1
    record_events: bool = False
    events: List[AdviceEvent] = field(default_factory=list)

    def __post_init__(self):
        if self.budget < 0:
            raise ContractViolation(f"budget must be >= 0, got {self.budget}")
        if self.remaining < 0:
            self.remaining = self.budget

    @property
    def spent(self) -> int:
        return self.budget - self.remaining

    def choice(self, state: Any) -> int:
        """Action the teacher would advise at state (consumes randomness for RANDOM)."""
        if self.quality == TeacherQuality.RANDOM:
            return int(self.rng.integers(self.n_actions))
        q_values = self.q_source(state)
        if self.quality == TeacherQuality.CORRECT:
            return int(np.argmax(q_values))
        return int(np.argmin(q_values))

    def advise(self, state: Any, intended_action: int, episode: int = 0,
               step: int = 0) -> Optional[int]:
        """
        Decide on advice for the student's intended action.

        Args:
            state: Current student state
            intended_action: Action the student's policy chose, not yet executed
            episode: Episode index, for the event log
            step: Step index within the episode, for the event log

        Returns:
            Advised action the student must execute, or None
        """
        if not 0 <= intended_action < self.n_actions:
            raise ContractViolation(f"illegal intended action {intended_action}")
        if self.quality == TeacherQuality.NONE or self.remaining == 0:
            return None

        suggestion = self.choice(state)
        if self.strategy == AdviceStrategy.MISTAKE_CORRECTING and suggestion == intended_action:
            return None

        self.remaining -= 1
        if self.record_events:
            self.events.append(AdviceEvent(episode, step, state, intended_action, suggestion))
        return suggestion


def advise(t: Teacher, state: Any, intended_action: int) -> Optional[int]:
    """Functional form of Teacher.advise; t is updated in place."""
    return t.advise(state, intended_action)


def make_teacher(
    quality: Union[TeacherQuality, str],
    strategy: Union[AdviceStrategy, str],
    budget: int,
    oracle_q: Optional[Union[QTable, QSource]] = None,
    n_actions: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
    record_events: bool = False,
) -> Teacher:
    """
    Build a teacher.

    Args:
        quality: correct (oracle argmax), poor (oracle argmin), random, none
        strategy: mistake (advise only on disagreement) or early (first B steps)
        budget: Number of advised actions allowed
        oracle_q: QTable or callable state -> Q-values; required for correct/poor
        n_actions: Action count; taken from oracle_q when it is a QTable
        rng: Generator for the random teacher
        record_events: Keep an AdviceEvent log

    Returns:
        Teacher with remaining == budget
    """
    quality = TeacherQuality(quality)
    strategy = AdviceStrategy(strategy)

    q_source: Optional[QSource] = None
    if isinstance(oracle_q, QTable):
        table = oracle_q.values
        q_source = lambda state: table[state]  # noqa: E731
        n_actions = n_actions or oracle_q.n_actions
    elif oracle_q is not None:
        q_source = oracle_q

    if quality in (TeacherQuality.CORRECT, TeacherQuality.POOR) and q_source is None:
        raise ContractViolation(f"a {quality.value} teacher needs an oracle Q")
    if n_actions is None:
        raise ContractViolation("n_actions is required when no oracle table is given")
    if quality == TeacherQuality.RANDOM and rng is None:
        raise ContractViolation("a random teacher needs a generator")

    return Teacher(
        quality=quality,
        strategy=strategy,
        budget=budget,
        n_actions=n_actions,
        q_source=q_source,
        rng=rng,
        record_events=record_events,
    )
