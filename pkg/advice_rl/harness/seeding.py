"""
Deterministic seed derivation.

Per-trial seeds come from a splitmix64 finalizer over the master seed and
the trial index, so every trial's seed is known without running the ones
before it. Within a trial, independent numpy generators are spawned from
[seed, stream] entropy pairs:

    0 policy exploration, 1 environment, 2 random teacher,
    [3, checkpoint] greedy evaluation, 4 teacher pre-training and 5 assumption rollouts (master seed)
"""

from typing import List, NamedTuple

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15

POLICY_STREAM = 0
ENV_STREAM = 1
TEACHER_STREAM = 2
EVAL_STREAM = 3
PRETRAIN_STREAM = 4
ASSUMPTION_STREAM = 5


def mix(master: int, index: int) -> int:
    """splitmix64 output for state master + (index + 1) * golden gamma."""
    z = (master + (index + 1) * GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def trial_seeds(master: int, trials: int) -> List[int]:
    return [mix(master, i) for i in range(trials)]


class TrialStreams(NamedTuple):
    policy: np.random.Generator
    env: np.random.Generator
    teacher: np.random.Generator


def trial_streams(seed: int) -> TrialStreams:
    return TrialStreams(
        policy=np.random.default_rng([seed, POLICY_STREAM]),
        env=np.random.default_rng([seed, ENV_STREAM]),
        teacher=np.random.default_rng([seed, TEACHER_STREAM]),
    )


def eval_stream(seed: int, checkpoint: int) -> np.random.Generator:
    """Generator for the evaluation block after `checkpoint` training episodes."""
    return np.random.default_rng([seed, EVAL_STREAM, checkpoint])


def pretrain_seed(master: int) -> int:
    """Seed of the teacher pre-training run of an experiment."""
    return int(np.random.default_rng([master, PRETRAIN_STREAM]).integers(0, 2**63))
