"""
One-way analysis of variance across teacher groups.
"""

import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel, Field

from advice_rl.stats.beta import f_survival
from advice_rl.utils.errors import ContractViolation, DegenerateInputError


class AnovaResult(BaseModel):
    f_statistic: float = Field(ge=0.0)
    df_between: int
    df_within: int
    p_value: float = Field(ge=0.0, le=1.0)
    # Zero within-group variance but distinct group means
    separated: bool = False


def one_way_anova(groups: Sequence[Sequence[float]]) -> AnovaResult:
    """
    Test whether the group means differ.

    Args:
        groups: One sample list per group, k >= 2 groups of >= 2 samples

    Returns:
        AnovaResult with F = (SSB/(k-1)) / (SSW/(N-k)) and its upper-tail p-value

    Raises:
        ContractViolation: Too few groups or samples, or non-finite samples
        DegenerateInputError: All samples identical (SSB = SSW = 0)
    """
    if len(groups) < 2:
        raise ContractViolation(f"ANOVA needs at least 2 groups, got {len(groups)}")
    arrays = [np.asarray(g, dtype=float) for g in groups]
    for i, sample in enumerate(arrays):
        if sample.ndim != 1 or sample.size < 2:
            raise ContractViolation(f"group {i} needs at least 2 samples")
        if not np.all(np.isfinite(sample)):
            raise ContractViolation(f"group {i} contains non-finite samples")

    k = len(arrays)
    n = sum(sample.size for sample in arrays)
    grand_mean = np.concatenate(arrays).mean()
    ss_between = float(sum(s.size * (s.mean() - grand_mean) ** 2 for s in arrays))
    ss_within = float(sum(((s - s.mean()) ** 2).sum() for s in arrays))
    df_between, df_within = k - 1, n - k

    if ss_within == 0.0:
        if ss_between == 0.0:
            raise DegenerateInputError("all groups are constant and equal; F is undefined")
        return AnovaResult(f_statistic=math.inf, df_between=df_between,
                           df_within=df_within, p_value=0.0, separated=True)

    f_statistic = (ss_between / df_between) / (ss_within / df_within)
    return AnovaResult(
        f_statistic=f_statistic,
        df_between=df_between,
        df_within=df_within,
        p_value=f_survival(f_statistic, df_between, df_within),
    )
