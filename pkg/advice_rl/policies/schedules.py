"""
GLIE exploration schedules, indexed by the visit count of the state.
"""

import math

from advice_rl.utils.errors import ContractViolation


def glie_epsilon(visits: int, c: float = 1.0) -> float:
    """
    Exploration rate min(1, c / sqrt(n + 1)) after n visits of a state.

    Decays to zero while the sum over visits diverges, so every action
    keeps being tried infinitely often.
    """
    if visits < 0:
        raise ContractViolation(f"visit count must be >= 0, got {visits}")
    return min(1.0, c / math.sqrt(visits + 1))


def boltzmann_temperature(visits: int) -> float:
    """Logarithmic cooling T_k = 1 / ln(k + 2)."""
    if visits < 0:
        raise ContractViolation(f"visit count must be >= 0, got {visits}")
    return 1.0 / math.log(visits + 2)
