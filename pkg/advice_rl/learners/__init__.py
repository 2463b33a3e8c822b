"""Learners package: tabular and linear Q-learning and Sarsa."""

from .linear import WeightVector, q_update_linear, q_value_linear, sarsa_update_linear
from .schedules import ConstantStepSize, PowerDecay, StepSizeSchedule
from .snapshots import format_snapshot, parse_snapshot
from .students import LinearStudent, Student, TabularStudent
from .tabular import QTable, TdError, q_update_tabular, sarsa_update_tabular, temporal_difference

__all__ = [
    'WeightVector', 'q_update_linear', 'q_value_linear', 'sarsa_update_linear',
    'ConstantStepSize', 'PowerDecay', 'StepSizeSchedule',
    'format_snapshot', 'parse_snapshot',
    'LinearStudent', 'Student', 'TabularStudent',
    'QTable', 'TdError', 'q_update_tabular', 'sarsa_update_tabular', 'temporal_difference',
]
