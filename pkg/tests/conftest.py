"""Shared fixtures for the advice_rl test suite."""

from typing import Any, Dict

import numpy as np
import pytest

from advice_rl.cli.config_file import validate_config
from advice_rl.harness.models import ExperimentConfig


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(12345)


def chain_config(**sections: Dict[str, Any]) -> ExperimentConfig:
    """Linear Chain Q-learning config with the replication parameters, sections overridable."""
    raw: Dict[str, Dict[str, Any]] = {
        "domain": {"name": "linear_chain"},
        "learner": {"kind": "q_tabular", "gamma": 0.8, "alpha": 0.9},
        "policy": {"kind": "epsilon_greedy", "epsilon": 0.1},
        "teacher": {"quality": "none", "budget": 0},
        "experiment": {"trials": 2, "episodes": 20, "eval_every": 0, "seed": 11},
    }
    for section, values in sections.items():
        raw.setdefault(section, {}).update(values)
    return validate_config(raw)


@pytest.fixture
def make_chain_config():
    return chain_config
