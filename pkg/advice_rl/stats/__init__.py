"""Statistics package: AUC, one-way ANOVA and the incomplete beta function."""

from .anova import AnovaResult, one_way_anova
from .beta import f_survival, reg_inc_beta
from .curves import GroupSummary, auc, format_p_value, summarize_group

__all__ = [
    'AnovaResult', 'one_way_anova',
    'f_survival', 'reg_inc_beta',
    'GroupSummary', 'auc', 'format_p_value', 'summarize_group',
]
