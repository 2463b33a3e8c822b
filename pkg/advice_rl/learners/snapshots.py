"""
CSV snapshots of Q-tables and weight vectors.

Q-table: header `state,a0,a1,...`, one row per state.
Weights: header `index,weight`, one row per component.
Lines starting with `#` are comments (digest lines).
"""

import csv
import io
from typing import Optional

import numpy as np

from advice_rl.utils.errors import ContractViolation


def format_snapshot(values: np.ndarray, comment: Optional[str] = None) -> str:
    """
    Render a 2-D table or 1-D weight vector as CSV text.

    Args:
        values: (n_states, n_actions) table or (d,) weights
        comment: Optional first line, written as `# comment`

    Returns:
        CSV text with `\\n` line endings
    """
    buffer = io.StringIO()
    if comment:
        buffer.write(f"# {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")

    if values.ndim == 2:
        writer.writerow(["state"] + [f"a{a}" for a in range(values.shape[1])])
        for state, row in enumerate(values):
            writer.writerow([state] + [repr(float(v)) for v in row])
    elif values.ndim == 1:
        writer.writerow(["index", "weight"])
        for index, value in enumerate(values):
            writer.writerow([index, repr(float(value))])
    else:
        raise ContractViolation(f"snapshot must be 1-D or 2-D, got {values.ndim}-D")
    return buffer.getvalue()


def parse_snapshot(text: str) -> np.ndarray:
    """Inverse of format_snapshot; comment lines are skipped."""
    lines = [line for line in text.splitlines() if line and not line.startswith("#")]
    if not lines:
        raise ContractViolation("snapshot is empty")
    rows = list(csv.reader(lines))
    header, body = rows[0], rows[1:]

    if header == ["index", "weight"]:
        return np.array([float(value) for _, value in body])
    if header and header[0] == "state":
        return np.array([[float(v) for v in row[1:]] for row in body])
    raise ContractViolation(f"unrecognized snapshot header {header}")
