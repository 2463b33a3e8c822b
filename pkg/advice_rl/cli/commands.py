"""
Command implementations behind `python -m advice_rl.main`.

Each command takes the parsed argparse namespace and returns an exit
status; errors are mapped to statuses by run_command().
"""

import argparse
import hashlib
import time
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError

from advice_rl.cli.artifacts import (
    comparison_csv,
    parse_results_csv,
    read_text,
    snapshot_path,
    write_run_artifacts,
    write_text,
)
from advice_rl.cli.config_file import load_config
from advice_rl.cli.formatters import render_assumptions, render_comparison
from advice_rl.cli.manifest import RunManifest, digest_line
from advice_rl.config import settings
from advice_rl.env.base import FiniteMdp
from advice_rl.harness.assumptions import check_config_assumptions
from advice_rl.harness.experiment import run_experiment_async
from advice_rl.harness.factory import build_env
from advice_rl.harness.models import DomainConfig
from advice_rl.harness.seeding import pretrain_seed
from advice_rl.harness.trial import pretrain_teacher
from advice_rl.learners.snapshots import format_snapshot
from advice_rl.oracle.value_iteration import value_iteration
from advice_rl.stats.anova import one_way_anova
from advice_rl.stats.curves import format_p_value
from advice_rl.utils.errors import (
    AdviceRLError,
    ConfigError,
    ContractViolation,
    DegenerateInputError,
    DivergenceError,
    TrialFailedError,
)
from advice_rl.utils.logger import logger

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_CONFIG = 2
EXIT_DIVERGENCE = 3
EXIT_DEGENERATE = 4


def exit_code_for(error: BaseException) -> int:
    if isinstance(error, TrialFailedError):
        error = error.cause
    if isinstance(error, DivergenceError):
        return EXIT_DIVERGENCE
    if isinstance(error, DegenerateInputError):
        return EXIT_DEGENERATE
    if isinstance(error, (ConfigError, ContractViolation)):
        return EXIT_CONFIG
    return EXIT_ERROR


def out_dir(args: argparse.Namespace) -> Path:
    return Path(getattr(args, "out", None) or settings.ADVICE_RL_OUT)


def overrides_from_args(args: argparse.Namespace) -> Dict[str, Dict[str, Any]]:
    return {
        "experiment": {
            "seed": getattr(args, "seed", None),
            "trials": getattr(args, "trials", None),
            "episodes": getattr(args, "episodes", None),
        },
        "teacher": {
            "budget": getattr(args, "budget", None),
            "quality": getattr(args, "teacher", None),
            "strategy": getattr(args, "strategy", None),
        },
    }


async def cmd_run(args: argparse.Namespace) -> int:
    """Run an experiment and write curve, eval, results and manifest files."""
    config = load_config(args.config, overrides_from_args(args))
    target = out_dir(args)
    started = time.perf_counter()

    result = await run_experiment_async(config, args.jobs)
    paths = await write_run_artifacts(result, target, advice_log=args.advice_log)

    manifest_path = target / f"{result.group}_manifest.txt"
    manifest = RunManifest(
        config_digest=config.config_digest,
        protocol_digest=config.protocol_digest,
        master_seed=config.experiment.seed,
        output_paths=[str(p) for p in paths] + [str(manifest_path)],
        duration_seconds=time.perf_counter() - started,
    )
    await write_text(manifest_path, manifest.to_text())

    print(
        f"{result.group}: FR {result.fr_mean:.2f} ± {result.fr_std:.2f}, "
        f"TR {result.tr_mean:.2f} ± {result.tr_std:.2f} over {result.trials} trials"
    )
    return EXIT_OK


async def cmd_compare(args: argparse.Namespace) -> int:
    """ANOVA over the per-trial TR samples of several results files."""
    if len(args.results) < 2:
        raise ContractViolation("compare needs at least two results files")
    sets = [parse_results_csv(await read_text(Path(p)), p) for p in args.results]

    first = sets[0]
    for other in sets[1:]:
        if other.episodes != first.episodes:
            raise ContractViolation(
                f"episode counts differ: {first.source} has {first.episodes}, "
                f"{other.source} has {other.episodes}"
            )
        if len(other.tr_samples) != len(first.tr_samples):
            raise ContractViolation(
                f"trial counts differ: {first.source} has {len(first.tr_samples)}, "
                f"{other.source} has {len(other.tr_samples)}"
            )
        if other.protocol_digest != first.protocol_digest:
            if not args.force:
                raise ConfigError(
                    f"protocol digests differ ({first.source}: {first.protocol_digest}, "
                    f"{other.source}: {other.protocol_digest}); use --force to compare anyway"
                )
            logger.warning(f"Comparing {other.source} despite a different protocol digest")

    seen = set()
    for result_set in sets:
        key = (result_set.group, tuple(result_set.tr_samples))
        if key in seen:
            raise DegenerateInputError(f"{result_set.source} duplicates another input group")
        seen.add(key)

    anova = one_way_anova([s.tr_samples for s in sets])
    summaries = sorted((s.summary for s in sets), key=lambda s: s.tr, reverse=True)
    print(render_comparison(summaries, anova, len(first.tr_samples), first.episodes), end="")

    combined = hashlib.sha256(",".join(s.config_digest for s in sets).encode()).hexdigest()[:16]
    await write_text(
        out_dir(args) / "comparison.csv",
        comparison_csv(summaries, anova, digest_line(combined, first.protocol_digest)),
    )
    logger.info(f"ANOVA F={anova.f_statistic:.4g}, p {format_p_value(anova.p_value)}")
    return EXIT_OK


async def cmd_oracle(args: argparse.Namespace) -> int:
    """Value iteration on a finite domain; writes Q* as a snapshot CSV."""
    if args.config:
        config = load_config(args.config)
        domain = config.domain
        gamma = config.learner.gamma if args.gamma is None else args.gamma
    else:
        try:
            domain = DomainConfig(name=args.domain, chain_length=args.length)
        except ValidationError as e:
            raise ConfigError(f"domain: {e.errors()[0]['msg']}") from e
        gamma = 0.8 if args.gamma is None else args.gamma

    env = build_env(domain, gamma)
    if not isinstance(env, FiniteMdp):
        raise ConfigError(f"domain.name: value iteration needs a finite domain, got {domain.name}")
    optimal = value_iteration(env, gamma, args.tol)

    identity = f"{domain.model_dump_json()}|gamma={gamma!r}|tol={args.tol!r}"
    digest = hashlib.sha256(identity.encode()).hexdigest()[:16]
    path = snapshot_path(out_dir(args), "oracle_q.csv")
    await write_text(path, format_snapshot(optimal.values, comment=f"config_digest={digest}"))
    print(f"Q* for {domain.name} (gamma={gamma}) in {optimal.iterations} sweeps, "
          f"residual {optimal.residual:.3g}")
    return EXIT_OK


async def cmd_check_assumptions(args: argparse.Namespace) -> int:
    """Print (and save) the per-probe verdicts of the linear convergence condition."""
    config = load_config(args.config, overrides_from_args(args))
    report = check_config_assumptions(config)
    text = render_assumptions(report, config.config_digest)
    print(text, end="")
    await write_text(out_dir(args) / f"{config.group}_assumptions.txt", text)
    return EXIT_OK


async def cmd_pretrain(args: argparse.Namespace) -> int:
    """Pre-train a teacher and write its frozen weights."""
    config = load_config(args.config, overrides_from_args(args))
    theta = pretrain_teacher(config, pretrain_seed(config.experiment.seed), args.pretrain_episodes)
    comment = f"config_digest={config.config_digest} protocol_digest={config.protocol_digest}"
    path = snapshot_path(out_dir(args), f"{config.group}_teacher_weights.csv")
    await write_text(path, format_snapshot(theta, comment=comment))
    return EXIT_OK


COMMANDS = {
    "run": cmd_run,
    "compare": cmd_compare,
    "oracle": cmd_oracle,
    "check-assumptions": cmd_check_assumptions,
    "pretrain": cmd_pretrain,
}


async def run_command(args: argparse.Namespace) -> int:
    """Dispatch to the command and translate package errors into exit statuses."""
    try:
        return await COMMANDS[args.command](args)
    except AdviceRLError as e:
        code = exit_code_for(e)
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}")
        return code
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return EXIT_ERROR
