"""
Single-trial loop: the student acts, the teacher may override, the
environment steps and the student learns from the executed action.
"""

from pathlib import Path
from typing import Any, List, Optional, Tuple

import numpy as np

from advice_rl.env.base import FiniteMdp
from advice_rl.harness.convergence import ConvergenceTracker
from advice_rl.harness.factory import build_env, build_policy, build_student, build_teacher
from advice_rl.harness.models import ExperimentConfig, LearningCurve, TeacherConfig
from advice_rl.harness.seeding import eval_stream, pretrain_seed, trial_streams
from advice_rl.learners.snapshots import parse_snapshot
from advice_rl.oracle.value_iteration import value_iteration
from advice_rl.policies.selection import greedy_action
from advice_rl.utils.errors import BudgetViolation, ConfigError, DivergenceError
from advice_rl.utils.logger import logger


class TrialRunner:
    """Owns the environment, student, policy, teacher and generators of one trial."""

    def __init__(self, config: ExperimentConfig, seed: int, trial_index: int = 0,
                 knowledge: Optional[np.ndarray] = None):
        self.config = config
        self.seed = seed
        self.trial_index = trial_index
        self.env = build_env(config.domain, config.learner.gamma)
        self.policy = build_policy(config.policy)
        self.student = build_student(config, self.env, self.policy)
        self.streams = trial_streams(seed)
        self.teacher = build_teacher(config, self.env, knowledge, self.streams.teacher)
        self.tracker = ConvergenceTracker(
            config.experiment.convergence_epsilon,
            config.experiment.convergence_window,
            self.student.convergence_scale,
        )

    def _propose(self, state: Any) -> int:
        q_values = self.student.q_values(state)
        return self.policy.select(q_values, self.student.state_visits(state), self.streams.policy)

    def _act(self, state: Any, episode: int, step: int) -> int:
        intended = self._propose(state)
        advised = self.teacher.advise(state, intended, episode, step)
        return intended if advised is None else advised

    def run_episode(self, episode: int) -> Tuple[float, int]:
        """
        Play and learn from one training episode.

        Returns:
            (undiscounted return, number of steps)
        """
        env, student = self.env, self.student
        state = env.reset(self.streams.env)
        total, steps = 0.0, 0
        if env.is_terminal(state):
            return total, steps

        cap = env.max_episode_steps
        action = self._act(state, episode, steps)
        while True:
            tr = env.step(state, action, self.streams.env)
            total += tr.reward
            steps += 1

            if tr.done:
                student.learn(tr, None)
                break
            if cap is not None and steps >= cap:
                # Cut off: bootstrap from the policy's own proposal, no advice
                student.learn(tr, self._propose(tr.next_state) if student.on_policy else None)
                break

            if student.on_policy:
                next_action = self._act(tr.next_state, episode, steps)
                student.learn(tr, next_action)
            else:
                student.learn(tr)
                next_action = self._act(tr.next_state, episode, steps)
            state, action = tr.next_state, next_action

        return total, steps

    def evaluate(self, checkpoint: int) -> float:
        """Mean return of greedy episodes; no learning and no advice."""
        env = self.env
        rng = eval_stream(self.seed, checkpoint)
        limit = self.config.experiment.eval_max_steps
        returns = []
        for _ in range(self.config.experiment.eval_episodes):
            state = env.reset(rng)
            total, steps = 0.0, 0
            while not env.is_terminal(state) and steps < limit:
                tr = env.step(state, greedy_action(self.student.q_values(state)), rng)
                total += tr.reward
                steps += 1
                state = tr.next_state
            returns.append(total)
        return float(np.mean(returns))

    def run(self) -> LearningCurve:
        experiment = self.config.experiment
        returns: List[float] = []
        step_counts: List[int] = []
        advice_spent: List[int] = []
        checkpoints: List[int] = []
        eval_returns: List[float] = []

        self.tracker.observe(self.student.snapshot())
        episode = 0
        try:
            for episode in range(1, experiment.episodes + 1):
                remaining_before = self.teacher.remaining
                total, steps = self.run_episode(episode)
                returns.append(total)
                step_counts.append(steps)
                advice_spent.append(remaining_before - self.teacher.remaining)
                self.tracker.observe(self.student.snapshot())

                if experiment.eval_every and episode % experiment.eval_every == 0:
                    checkpoints.append(episode)
                    eval_returns.append(self.evaluate(episode))
        except DivergenceError as e:
            logger.error(f"Trial {self.trial_index} (seed {self.seed}) diverged in episode {episode}: {e}")
            raise DivergenceError(f"trial {self.trial_index}, episode {episode}: {e}") from e

        self._check_budget(advice_spent)
        key = self.env.mixing_key
        events = [
            (ev.episode, ev.step, str(key(ev.state)), ev.intended, ev.advised)
            for ev in self.teacher.events
        ]
        logger.debug(
            f"Trial {self.trial_index} done: TR={sum(returns):.2f}, advice={sum(advice_spent)}, "
            f"converged at {self.tracker.converged_at}"
        )
        return LearningCurve(
            trial=self.trial_index,
            seed=self.seed,
            budget=self.teacher.budget,
            returns=returns,
            steps=step_counts,
            advice_spent=advice_spent,
            eval_checkpoints=checkpoints,
            eval_returns=eval_returns,
            convergence_episode=self.tracker.converged_at,
            final_estimate=self.student.snapshot().tolist(),
            greedy_policy=self.student.greedy_policy(),
            advice_events=events,
        )

    def _check_budget(self, advice_spent: List[int]) -> None:
        budget = self.teacher.budget
        if sum(advice_spent) > budget or len(self.teacher.events) > budget:
            raise BudgetViolation(
                f"trial {self.trial_index}: {sum(advice_spent)} pieces of advice "
                f"exceed budget {budget}"
            )


def run_trial(config: ExperimentConfig, trial_seed: int, trial_index: int = 0,
              knowledge: Optional[np.ndarray] = None) -> LearningCurve:
    """
    Run one independent trial.

    Args:
        config: Validated experiment configuration
        trial_seed: Seed of this trial (see seeding.trial_seeds)
        trial_index: Position of the trial in its experiment
        knowledge: Teacher Q-table or frozen weights; built on demand when None

    Returns:
        LearningCurve of the trial

    Raises:
        DivergenceError: The learner's estimate became non-finite or unbounded
    """
    if knowledge is None and config.teacher.needs_oracle:
        knowledge = prepare_teacher_knowledge(config)
    return TrialRunner(config, trial_seed, trial_index, knowledge).run()


def pretrain_teacher(config: ExperimentConfig, seed: int,
                     episodes: Optional[int] = None) -> np.ndarray:
    """
    Train a linear Sarsa student without advice and return its weights.

    Uses the experiment's domain, policy and step size; the frozen
    weights then act as the teacher's Q estimate.
    """
    episodes = episodes or config.teacher.pretrain_episodes
    pretrain_config = config.model_copy(update={
        "learner": config.learner.model_copy(update={"kind": "sarsa_linear"}),
        "teacher": TeacherConfig(),
        "experiment": config.experiment.model_copy(
            update={"episodes": episodes, "eval_every": 0, "trials": 1}
        ),
    })
    logger.info(f"Pre-training teacher for {episodes} episodes (seed {seed})")
    curve = TrialRunner(pretrain_config, seed).run()
    return np.array(curve.final_estimate, dtype=float)


def prepare_teacher_knowledge(config: ExperimentConfig) -> Optional[np.ndarray]:
    """
    Build what a correct or poor teacher consults.

    Order: weights file if configured, value iteration on finite domains,
    otherwise a pre-training run seeded from the master seed.
    """
    teacher = config.teacher
    if not teacher.needs_oracle:
        return None

    if teacher.weights_path:
        path = Path(teacher.weights_path)
        if not path.exists():
            raise ConfigError(f"teacher.weights_path: file not found: {path}")
        return parse_snapshot(path.read_text(encoding="utf-8"))

    env = build_env(config.domain, config.learner.gamma)
    if isinstance(env, FiniteMdp):
        return value_iteration(env).values
    return pretrain_teacher(config, pretrain_seed(config.experiment.seed))
