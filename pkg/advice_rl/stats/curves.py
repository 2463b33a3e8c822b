"""
Learning-curve summaries: area under the curve and Table-1 style rows.
"""

import math
from typing import Sequence

import numpy as np
from pydantic import BaseModel

from advice_rl.utils.constants import P_VALUE_FLOOR
from advice_rl.utils.errors import ContractViolation


class GroupSummary(BaseModel):
    group: str
    fr: float
    fr_std: float
    tr: float
    tr_std: float


def auc(curve: Sequence[float]) -> float:
    """Area under a per-episode return curve with unit spacing (its sum)."""
    if len(curve) == 0:
        raise ContractViolation("cannot take the area under an empty curve")
    return math.fsum(float(v) for v in curve)


def summarize_group(group: str, fr_samples: Sequence[float],
                    tr_samples: Sequence[float]) -> GroupSummary:
    """Mean and population standard deviation of FR and TR."""
    fr = np.asarray(fr_samples, dtype=float)
    tr = np.asarray(tr_samples, dtype=float)
    if fr.size == 0 or tr.size == 0:
        raise ContractViolation(f"group {group} has no samples")
    return GroupSummary(
        group=group,
        fr=float(fr.mean()),
        fr_std=float(fr.std()),
        tr=float(tr.mean()),
        tr_std=float(tr.std()),
    )


def format_p_value(p: float) -> str:
    if p < P_VALUE_FLOOR:
        return f"< {P_VALUE_FLOOR:g}"
    return f"{p:.6g}"
