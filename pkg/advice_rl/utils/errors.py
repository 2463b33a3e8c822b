"""
Exception hierarchy.

Every error raised on purpose by the package derives from AdviceRLError so
the command line front end can map it to an exit status.
"""


class AdviceRLError(Exception):
    """Base class for all package errors."""


class ContractViolation(AdviceRLError, ValueError):
    """An operation was called outside its precondition."""


class ConfigError(AdviceRLError):
    """Experiment configuration is invalid."""


class DivergenceError(AdviceRLError):
    """A learner estimate became non-finite or exceeded its bound."""


class NonConvergenceError(AdviceRLError):
    """An iterative numerical routine hit its iteration cap."""


class DegenerateInputError(AdviceRLError):
    """Statistical input carries no variance at all."""


class AssumptionError(ContractViolation):
    """Assumption checker preconditions are not met."""


class BudgetViolation(AdviceRLError):
    """A teacher issued more advice than its budget allows."""


class TrialFailedError(AdviceRLError):
    """A trial aborted; carries the trial index and original cause."""

    def __init__(self, trial_index: int, cause: BaseException):
        self.trial_index = trial_index
        self.cause = cause
        super().__init__(f"trial {trial_index} failed: {cause}")
