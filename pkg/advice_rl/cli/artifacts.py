"""
CSV artifacts of a run and their parsers.

Numbers are written with repr() so they round-trip exactly and never
depend on locale; lines end with `\\n`. Files are written through
aiofiles by a single writer.
"""

import csv
import io
from pathlib import Path
from typing import Iterable, List, Optional, Sequence

import aiofiles
from pydantic import BaseModel

from advice_rl.cli.manifest import digest_line, parse_digest_line
from advice_rl.harness.models import AggregateResult
from advice_rl.stats.anova import AnovaResult
from advice_rl.stats.curves import GroupSummary
from advice_rl.utils.constants import (
    ADVICE_HEADER,
    CURVE_HEADER,
    EVAL_HEADER,
    RESULTS_HEADER,
    TRIALS_HEADER,
)
from advice_rl.utils.errors import ConfigError
from advice_rl.utils.logger import logger

TRIALS_MARKER = "# trials"
EPISODES_PREFIX = "# episodes="


def _num(value: float) -> str:
    return repr(float(value))


def _table(header: Sequence[str], rows: Iterable[Sequence], preamble: Sequence[str]) -> str:
    buffer = io.StringIO()
    for line in preamble:
        buffer.write(line + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _digest(result: AggregateResult) -> str:
    return digest_line(result.config_digest, result.protocol_digest)


def curve_csv(result: AggregateResult) -> str:
    rows = (
        (episode, _num(mean), _num(std), _num(spent))
        for episode, (mean, std, spent) in enumerate(
            zip(result.mean_returns, result.std_returns, result.mean_advice_spent), start=1
        )
    )
    return _table(CURVE_HEADER, rows, [_digest(result)])


def eval_csv(result: AggregateResult) -> str:
    rows = (
        (checkpoint, _num(mean), _num(std))
        for checkpoint, mean, std in zip(
            result.eval_checkpoints, result.mean_eval_returns, result.std_eval_returns
        )
    )
    return _table(EVAL_HEADER, rows, [_digest(result)])


def results_csv(result: AggregateResult) -> str:
    """Summary row, then one row per trial after the `# trials` marker."""
    summary = _table(
        RESULTS_HEADER,
        [(result.group, _num(result.fr_mean), _num(result.fr_std),
          _num(result.tr_mean), _num(result.tr_std))],
        [_digest(result), f"{EPISODES_PREFIX}{result.episodes}"],
    )
    trials = _table(
        TRIALS_HEADER,
        (
            (i, seed, _num(fr), _num(tr), "" if conv is None else conv)
            for i, (seed, fr, tr, conv) in enumerate(zip(
                result.seeds, result.fr_samples, result.auc_samples, result.convergence_episodes
            ))
        ),
        [TRIALS_MARKER],
    )
    return summary + trials


def advice_csv(result: AggregateResult) -> str:
    buffer = io.StringIO()
    buffer.write(_digest(result) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(ADVICE_HEADER)
    for curve in result.curves:
        buffer.write(f"# trial {curve.trial}\n")
        writer.writerows(curve.advice_events)
    return buffer.getvalue()


def comparison_csv(summaries: List[GroupSummary], anova: AnovaResult, header_line: str) -> str:
    rows = [(s.group, _num(s.fr), _num(s.fr_std), _num(s.tr), _num(s.tr_std)) for s in summaries]
    text = _table(RESULTS_HEADER, rows, [header_line])
    return text + (
        f"anova,{_num(anova.f_statistic)},{anova.df_between},{anova.df_within},{_num(anova.p_value)}\n"
    )


class ResultSet(BaseModel):
    """A results CSV read back for comparison."""

    source: str
    group: str
    config_digest: str
    protocol_digest: str
    episodes: int
    summary: GroupSummary
    seeds: List[int]
    fr_samples: List[float]
    tr_samples: List[float]


def parse_results_csv(text: str, source: str = "<string>") -> ResultSet:
    lines = text.splitlines()
    if not lines:
        raise ConfigError(f"{source}: empty results file")
    digests = parse_digest_line(lines[0])
    try:
        marker = lines.index(TRIALS_MARKER)
        episodes_line = next(line for line in lines if line.startswith(EPISODES_PREFIX))
        episodes = int(episodes_line[len(EPISODES_PREFIX):])
        head = [row for row in csv.reader(line for line in lines[1:marker] if not line.startswith("#"))]
        body = [row for row in csv.reader(lines[marker + 1:]) if row]
        if tuple(head[0]) != RESULTS_HEADER or tuple(body[0]) != TRIALS_HEADER:
            raise ValueError("unexpected header")
        group, fr, fr_std, tr, tr_std = head[1]
        trials = body[1:]
        return ResultSet(
            source=source,
            group=group,
            config_digest=digests.get("config_digest", ""),
            protocol_digest=digests.get("protocol_digest", ""),
            episodes=episodes,
            summary=GroupSummary(group=group, fr=float(fr), fr_std=float(fr_std),
                                 tr=float(tr), tr_std=float(tr_std)),
            seeds=[int(row[1]) for row in trials],
            fr_samples=[float(row[2]) for row in trials],
            tr_samples=[float(row[3]) for row in trials],
        )
    except (ValueError, IndexError, StopIteration) as e:
        raise ConfigError(f"{source}: malformed results file ({e})") from e


async def write_text(path: Path, text: str) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    async with aiofiles.open(path, "w", encoding="utf-8", newline="\n") as f:
        await f.write(text)
    logger.info(f"Wrote {path}")
    return path


async def read_text(path: Path) -> str:
    try:
        async with aiofiles.open(path, "r", encoding="utf-8") as f:
            return await f.read()
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e


async def write_run_artifacts(result: AggregateResult, out_dir: Path,
                              advice_log: bool = False) -> List[Path]:
    """Curve, eval and results CSVs (plus the advice log when asked)."""
    prefix = result.group
    written = [
        await write_text(out_dir / f"{prefix}_curve.csv", curve_csv(result)),
        await write_text(out_dir / f"{prefix}_eval.csv", eval_csv(result)),
        await write_text(out_dir / f"{prefix}_results.csv", results_csv(result)),
    ]
    if advice_log:
        written.append(await write_text(out_dir / f"{prefix}_advice.csv", advice_csv(result)))
    return written


def snapshot_path(out: Path, default_name: str, suffix: Optional[str] = ".csv") -> Path:
    """`out` itself when it names a file, else `out/default_name`."""
    if out.suffix == suffix:
        return out
    return out / default_name
