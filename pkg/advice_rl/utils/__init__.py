"""Shared utilities package."""

from .errors import (
    AdviceRLError,
    AssumptionError,
    BudgetViolation,
    ConfigError,
    ContractViolation,
    DegenerateInputError,
    DivergenceError,
    NonConvergenceError,
    TrialFailedError,
)

__all__ = [
    'AdviceRLError', 'AssumptionError', 'BudgetViolation', 'ConfigError',
    'ContractViolation', 'DegenerateInputError', 'DivergenceError',
    'NonConvergenceError', 'TrialFailedError',
]
