"""Oracle package: value iteration for finite MDPs."""

from .value_iteration import OptimalQ, greedy_policy_of, tabulate, value_iteration

__all__ = ['OptimalQ', 'greedy_policy_of', 'tabulate', 'value_iteration']
