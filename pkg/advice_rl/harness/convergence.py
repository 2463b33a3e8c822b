"""
Convergence detection on estimate snapshots.

Snapshot 0 is the initial estimate; snapshot i is taken after episode i.
The estimate has converged at N when the sup-norm change between
consecutive snapshots stays within the threshold for the W episodes
following N.
"""

from typing import Iterable, Optional

import numpy as np

from advice_rl.utils.errors import ContractViolation


class ConvergenceTracker:
    """Streaming form of detect_convergence; keeps only the last snapshot."""

    def __init__(self, epsilon: float, window: int, scale: float = 1.0):
        if epsilon <= 0.0:
            raise ContractViolation(f"convergence epsilon must be > 0, got {epsilon}")
        if window < 1:
            raise ContractViolation(f"convergence window must be >= 1, got {window}")
        self.threshold = epsilon * scale
        self.window = window
        self._previous: Optional[np.ndarray] = None
        self._index = -1
        self._run_start = 0
        self._run_length = 0
        self.converged_at: Optional[int] = None

    def observe(self, snapshot: np.ndarray) -> Optional[int]:
        """Feed the next snapshot; returns the convergence index once found."""
        self._index += 1
        if self.converged_at is not None:
            return self.converged_at

        if self._previous is not None:
            change = float(np.max(np.abs(snapshot - self._previous))) if snapshot.size else 0.0
            if change <= self.threshold:
                if self._run_length == 0:
                    self._run_start = self._index - 1
                self._run_length += 1
                if self._run_length >= self.window:
                    self.converged_at = self._run_start
            else:
                self._run_length = 0
        self._previous = np.array(snapshot, copy=True)
        return self.converged_at


def detect_convergence(q_snapshots: Iterable[np.ndarray], epsilon: float,
                       window: int) -> Optional[int]:
    """
    First snapshot index after which W consecutive changes are <= epsilon.

    Args:
        q_snapshots: Q-tables or weight vectors at episode boundaries
        epsilon: Sup-norm threshold, > 0
        window: Number of consecutive small changes required, >= 1

    Returns:
        Episode index N, or None if the snapshots never settle
    """
    tracker = ConvergenceTracker(epsilon, window)
    for snapshot in q_snapshots:
        if tracker.observe(np.asarray(snapshot, dtype=float)) is not None:
            return tracker.converged_at
    return None
