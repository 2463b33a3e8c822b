"""
Pydantic models for experiment configuration and results.

One model per config file section; ExperimentConfig aggregates them and
provides the canonical form the digests are computed over.
"""

import hashlib
import json
from typing import Any, Dict, List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from advice_rl.advice.teacher import AdviceStrategy, TeacherQuality
from advice_rl.stats.curves import auc
from advice_rl.utils.constants import (
    CHAIN_LENGTH,
    CHAIN_STEP_CAP,
    DEFAULT_DIVERGENCE_BOUND,
    DEFAULT_OMEGA,
    EVAL_EPISODES,
    EVAL_EVERY,
    PRETRAIN_EPISODES,
    PURSUIT_STEP_LIMIT,
)

DomainName = Literal["linear_chain", "grid_pursuit", "single_state", "two_state"]
LearnerKind = Literal["q_tabular", "sarsa_tabular", "q_linear", "sarsa_linear"]
PolicyKind = Literal["greedy", "epsilon_greedy", "glie", "boltzmann"]

# Labels only; never part of what a run computes
DIGEST_EXCLUDED = (("experiment", "group"),)
# Fields that distinguish the groups of one comparison
PROTOCOL_EXCLUDED = (("teacher", "quality"), ("teacher", "strategy")) + DIGEST_EXCLUDED


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class DomainConfig(_Section):
    name: DomainName = "linear_chain"
    chain_length: int = Field(default=CHAIN_LENGTH, ge=2)
    step_cap: int = Field(default=CHAIN_STEP_CAP, ge=1)
    maze_path: Optional[str] = None
    step_limit: int = Field(default=PURSUIT_STEP_LIMIT, ge=1)
    reward: float = 1.0  # single_state fixture

    @property
    def is_finite(self) -> bool:
        return self.name != "grid_pursuit"


class LearnerConfig(_Section):
    kind: LearnerKind = "q_tabular"
    gamma: float = Field(default=0.8, ge=0.0, le=1.0)
    step_size: Literal["constant", "power"] = "constant"
    alpha: float = Field(default=0.9, gt=0.0, le=1.0)
    omega: float = Field(default=DEFAULT_OMEGA, gt=0.5, le=1.0)
    divergence_bound: float = Field(default=DEFAULT_DIVERGENCE_BOUND, gt=0.0)
    initial_q: float = 0.0  # tabular learners only

    @model_validator(mode="after")
    def _check_initial_q(self) -> "LearnerConfig":
        if self.is_linear and self.initial_q != 0.0:
            raise ValueError("initial_q applies to tabular learners; linear weights start at 0")
        return self

    @property
    def is_linear(self) -> bool:
        return self.kind.endswith("_linear")

    @property
    def on_policy(self) -> bool:
        return self.kind.startswith("sarsa")


class PolicyConfig(_Section):
    kind: PolicyKind = "epsilon_greedy"
    epsilon: float = Field(default=0.1, ge=0.0, le=1.0)
    glie_c: float = Field(default=1.0, gt=0.0)
    temperature: Optional[float] = Field(default=None, gt=0.0)
    tie_break: Literal["lowest", "random"] = "lowest"


class TeacherConfig(_Section):
    quality: TeacherQuality = TeacherQuality.NONE
    strategy: AdviceStrategy = AdviceStrategy.MISTAKE_CORRECTING
    budget: int = Field(default=0, ge=0)
    weights_path: Optional[str] = None
    pretrain_episodes: int = Field(default=PRETRAIN_EPISODES, ge=1)

    @field_validator("quality", mode="before")
    @classmethod
    def _optimal_alias(cls, value: Any) -> Any:
        if isinstance(value, str) and value.strip().lower() == "optimal":
            return TeacherQuality.CORRECT
        return value

    @property
    def needs_oracle(self) -> bool:
        return self.quality in (TeacherQuality.CORRECT, TeacherQuality.POOR)


class ExperimentSettings(_Section):
    group: Optional[str] = None
    trials: int = Field(default=1, ge=1)
    episodes: int = Field(default=300, ge=1)
    eval_every: int = Field(default=EVAL_EVERY, ge=0)  # 0 disables evaluation
    eval_episodes: int = Field(default=EVAL_EPISODES, ge=1)
    eval_max_steps: int = Field(default=CHAIN_STEP_CAP, ge=1)
    seed: int = Field(default=0, ge=0, lt=2**64)
    convergence_epsilon: float = Field(default=0.01, gt=0.0)
    convergence_window: int = Field(default=10, ge=1)


class AssumptionSettings(_Section):
    sample_count: int = Field(default=20_000, ge=1)
    burn_in: int = Field(default=1_000, ge=0)
    probe_count: int = Field(default=3, ge=0)
    probe_scale: float = Field(default=1.0, gt=0.0)


class ExperimentConfig(_Section):
    """Complete, validated experiment description."""

    domain: DomainConfig = Field(default_factory=DomainConfig)
    learner: LearnerConfig = Field(default_factory=LearnerConfig)
    policy: PolicyConfig = Field(default_factory=PolicyConfig)
    teacher: TeacherConfig = Field(default_factory=TeacherConfig)
    experiment: ExperimentSettings = Field(default_factory=ExperimentSettings)
    assumptions: AssumptionSettings = Field(default_factory=AssumptionSettings)

    @model_validator(mode="after")
    def _check_combination(self) -> "ExperimentConfig":
        if self.domain.name == "grid_pursuit" and not self.learner.is_linear:
            raise ValueError("grid_pursuit needs a linear learner (q_linear or sarsa_linear)")
        return self

    @property
    def group(self) -> str:
        if self.experiment.group:
            return self.experiment.group
        return self.teacher.quality.value

    def canonical(self, exclude: Tuple[Tuple[str, str], ...] = ()) -> str:
        """Sorted-key JSON of every field, defaults included."""
        data = self.model_dump(mode="json")
        for section, key in exclude:
            data[section].pop(key, None)
        return json.dumps(data, sort_keys=True, separators=(",", ":"))

    @property
    def config_digest(self) -> str:
        return hashlib.sha256(self.canonical(DIGEST_EXCLUDED).encode()).hexdigest()[:16]

    @property
    def protocol_digest(self) -> str:
        return hashlib.sha256(self.canonical(PROTOCOL_EXCLUDED).encode()).hexdigest()[:16]


class LearningCurve(BaseModel):
    """Everything recorded about one trial."""

    trial: int
    seed: int
    budget: int
    returns: List[float]
    steps: List[int]
    advice_spent: List[int]
    eval_checkpoints: List[int] = Field(default_factory=list)
    eval_returns: List[float] = Field(default_factory=list)
    convergence_episode: Optional[int] = None
    final_estimate: List[Any] = Field(default_factory=list)
    greedy_policy: Optional[List[int]] = None
    advice_events: List[Tuple[int, int, str, int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_lengths(self) -> "LearningCurve":
        if not len(self.returns) == len(self.steps) == len(self.advice_spent):
            raise ValueError("per-episode sequences differ in length")
        if len(self.eval_checkpoints) != len(self.eval_returns):
            raise ValueError("evaluation checkpoints and returns differ in length")
        return self

    @property
    def total_advice(self) -> int:
        return sum(self.advice_spent)

    @property
    def total_reward(self) -> float:
        return auc(self.returns)

    @property
    def final_reward(self) -> float:
        return self.returns[-1]


class AggregateResult(BaseModel):
    """Across-trial summary of one experiment (one teacher group)."""

    group: str
    trials: int
    episodes: int
    config_digest: str
    protocol_digest: str
    mean_returns: List[float]
    std_returns: List[float]
    mean_advice_spent: List[float]
    eval_checkpoints: List[int]
    mean_eval_returns: List[float]
    std_eval_returns: List[float]
    fr_mean: float
    fr_std: float
    tr_mean: float
    tr_std: float
    seeds: List[int]
    fr_samples: List[float]
    auc_samples: List[float]
    convergence_episodes: List[Optional[int]]
    curves: List[LearningCurve]

    @model_validator(mode="after")
    def _check_trials(self) -> "AggregateResult":
        if len(self.curves) != self.trials or len(self.auc_samples) != self.trials:
            raise ValueError(f"aggregate must cover exactly {self.trials} trials")
        return self

    @property
    def converged_fraction(self) -> float:
        return sum(e is not None for e in self.convergence_episodes) / self.trials


class AssumptionReport(BaseModel):
    """Estimated second-moment matrices and the per-probe convergence condition."""

    gamma: float
    sample_count: int
    sigma_pi: List[List[float]]
    probes: List[List[float]]
    sigma_star: List[List[List[float]]]
    min_eigenvalues: List[float]
    verdicts: List[bool]
    tv_distance: float

    @property
    def dimension(self) -> int:
        return len(self.sigma_pi)

    @property
    def sigma_pi_matrix(self) -> np.ndarray:
        return np.array(self.sigma_pi)

    @property
    def all_pass(self) -> bool:
        return all(self.verdicts)

    def probe_rows(self) -> List[Dict[str, Any]]:
        return [
            {"index": i, "theta": theta, "sigma_star": star, "min_eigenvalue": eig, "verdict": ok}
            for i, (theta, star, eig, ok) in enumerate(
                zip(self.probes, self.sigma_star, self.min_eigenvalues, self.verdicts)
            )
        ]
