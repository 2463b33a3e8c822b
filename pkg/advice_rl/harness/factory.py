"""
Builders turning an ExperimentConfig into live objects.

Everything built here is owned by a single trial, so trials never share
mutable state.
"""

from pathlib import Path
from typing import Optional

import numpy as np

from advice_rl.advice.teacher import Teacher, make_teacher
from advice_rl.env.base import FeatureMap, FiniteMdp, Mdp, OneHotFeatures
from advice_rl.env.features import PursuitFeatures
from advice_rl.env.fixtures import SingleStateMdp, TwoStateMdp
from advice_rl.env.linear_chain import LinearChain
from advice_rl.env.maze import load_maze
from advice_rl.env.pursuit import GridPursuit
from advice_rl.harness.models import DomainConfig, ExperimentConfig, LearnerConfig, PolicyConfig
from advice_rl.learners.linear import WeightVector
from advice_rl.learners.schedules import ConstantStepSize, PowerDecay, StepSizeSchedule
from advice_rl.learners.students import LinearStudent, Student, TabularStudent
from advice_rl.learners.tabular import QTable
from advice_rl.policies.policy import (
    BoltzmannPolicy,
    EpsilonGreedyPolicy,
    GlieEpsilonGreedyPolicy,
    GreedyPolicy,
    Policy,
)
from advice_rl.utils.errors import ConfigError


def build_env(domain: DomainConfig, gamma: float) -> Mdp:
    if domain.name == "linear_chain":
        return LinearChain(domain.chain_length, gamma, domain.step_cap)
    if domain.name == "grid_pursuit":
        maze = load_maze(Path(domain.maze_path)) if domain.maze_path else load_maze()
        return GridPursuit(maze, gamma, domain.step_limit)
    if domain.name == "single_state":
        return SingleStateMdp(domain.reward, gamma, domain.step_cap)
    return TwoStateMdp(gamma, domain.step_cap)


def build_features(env: Mdp) -> FeatureMap:
    if isinstance(env, GridPursuit):
        return PursuitFeatures(env.maze)
    if isinstance(env, FiniteMdp):
        return OneHotFeatures(env.n_states, env.n_actions)
    raise ConfigError(f"no feature map for {type(env).__name__}")


def build_schedule(learner: LearnerConfig) -> StepSizeSchedule:
    if learner.step_size == "power":
        return PowerDecay(learner.omega)
    return ConstantStepSize(learner.alpha)


def build_policy(policy: PolicyConfig) -> Policy:
    if policy.kind == "greedy":
        return GreedyPolicy(policy.tie_break)
    if policy.kind == "glie":
        return GlieEpsilonGreedyPolicy(policy.glie_c, policy.tie_break)
    if policy.kind == "boltzmann":
        return BoltzmannPolicy(policy.temperature)
    return EpsilonGreedyPolicy(policy.epsilon, policy.tie_break)


def build_student(config: ExperimentConfig, env: Mdp, policy: Policy) -> Student:
    learner = config.learner
    schedule = build_schedule(learner)

    if not learner.is_linear:
        if not isinstance(env, FiniteMdp):
            raise ConfigError(f"tabular learner needs a finite domain, got {config.domain.name}")
        return TabularStudent(env.n_states, env.n_actions, schedule, learner.gamma,
                              learner.on_policy, learner.initial_q)

    return LinearStudent(
        build_features(env),
        schedule,
        learner.gamma,
        learner.on_policy,
        learner.divergence_bound,
        track_state_visits=policy.uses_visits,
        enumerable_states=env.n_states if isinstance(env, FiniteMdp) else None,
    )


def frozen_teacher_source(env: Mdp, knowledge: np.ndarray):
    """
    Wrap teacher knowledge for make_teacher.

    A 2-D array is a Q-table over a finite domain; a 1-D array is a frozen
    weight vector over the domain's feature map.
    """
    if knowledge.ndim == 2:
        return QTable(knowledge, np.zeros(knowledge.shape, dtype=np.int64))
    weights = WeightVector(np.array(knowledge, dtype=float), build_features(env))
    return weights.q_values


def build_teacher(config: ExperimentConfig, env: Mdp, knowledge: Optional[np.ndarray],
                  rng: np.random.Generator) -> Teacher:
    teacher = config.teacher
    if teacher.needs_oracle and knowledge is None:
        raise ConfigError(f"teacher quality {teacher.quality.value} needs teacher knowledge")
    source = frozen_teacher_source(env, knowledge) if knowledge is not None else None
    return make_teacher(
        teacher.quality,
        teacher.strategy,
        teacher.budget,
        oracle_q=source,
        n_actions=env.n_actions,
        rng=rng,
        record_events=True,
    )
