"""
Step-size schedules.

PowerDecay gives alpha = 1 / (1 + n)^omega for the n-th update of a
(state, action) pair; omega in (0.5, 1] keeps sum(alpha) infinite and
sum(alpha^2) finite per pair.
"""

from abc import ABC, abstractmethod

from advice_rl.utils.constants import DEFAULT_OMEGA
from advice_rl.utils.errors import ContractViolation


class StepSizeSchedule(ABC):
    """Maps the visit count of a (state, action) pair to a step size."""

    needs_visits: bool = False

    @abstractmethod
    def __call__(self, visits: int) -> float:
        """Step size for the update following `visits` earlier updates."""


class ConstantStepSize(StepSizeSchedule):
    """Fixed alpha, as in the replication runs."""

    def __init__(self, alpha: float):
        if not 0.0 < alpha <= 1.0:
            raise ContractViolation(f"constant step size must be in (0, 1], got {alpha}")
        self.alpha = alpha

    def __call__(self, visits: int) -> float:
        return self.alpha

    def __repr__(self) -> str:
        return f"ConstantStepSize({self.alpha})"


class PowerDecay(StepSizeSchedule):
    """Visit-based polynomial decay."""

    needs_visits = True

    def __init__(self, omega: float = DEFAULT_OMEGA):
        if not 0.5 < omega <= 1.0:
            raise ContractViolation(f"power decay exponent must be in (0.5, 1], got {omega}")
        self.omega = omega

    def __call__(self, visits: int) -> float:
        if visits < 0:
            raise ContractViolation(f"visit count must be >= 0, got {visits}")
        return 1.0 / (1.0 + visits) ** self.omega

    def __repr__(self) -> str:
        return f"PowerDecay(omega={self.omega})"
