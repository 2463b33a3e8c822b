"""Harness package: trials, experiments, convergence and assumption checks."""

from .assumptions import check_config_assumptions, check_fa_assumptions, default_probes
from .convergence import ConvergenceTracker, detect_convergence
from .experiment import aggregate, run_experiment, run_experiment_async, run_trials
from .factory import build_env, build_features, build_policy, build_student, build_teacher
from .models import (
    AggregateResult,
    AssumptionReport,
    AssumptionSettings,
    DomainConfig,
    ExperimentConfig,
    ExperimentSettings,
    LearnerConfig,
    LearningCurve,
    PolicyConfig,
    TeacherConfig,
)
from .seeding import mix, trial_seeds, trial_streams
from .trial import TrialRunner, prepare_teacher_knowledge, pretrain_teacher, run_trial

__all__ = [
    'check_config_assumptions', 'check_fa_assumptions', 'default_probes',
    'ConvergenceTracker', 'detect_convergence',
    'aggregate', 'run_experiment', 'run_experiment_async', 'run_trials',
    'build_env', 'build_features', 'build_policy', 'build_student', 'build_teacher',
    'AggregateResult', 'AssumptionReport', 'AssumptionSettings', 'DomainConfig',
    'ExperimentConfig', 'ExperimentSettings', 'LearnerConfig', 'LearningCurve',
    'PolicyConfig', 'TeacherConfig',
    'mix', 'trial_seeds', 'trial_streams',
    'TrialRunner', 'prepare_teacher_knowledge', 'pretrain_teacher', 'run_trial',
]
