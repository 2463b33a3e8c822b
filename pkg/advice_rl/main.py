"""
Main application entry point.

Usage:
    python -m advice_rl.main run --config configs/chain_optimal.cfg --seed 7 --out results/
    python -m advice_rl.main compare results/*_results.csv
    python -m advice_rl.main oracle --domain linear_chain --gamma 0.8 --out results/
    python -m advice_rl.main check-assumptions --config configs/two_state.cfg
    python -m advice_rl.main pretrain --config configs/pursuit_optimal.cfg --out results/
"""

import argparse
import sys
from typing import Optional, Sequence

import anyio

from advice_rl import __version__
from advice_rl.cli.commands import run_command
from advice_rl.utils.constants import ORACLE_TOLERANCE
from advice_rl.utils.logger import logger


def _add_experiment_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", required=True, help="Experiment config file")
    p.add_argument("--seed", type=int, help="Master seed (overrides experiment.seed)")
    p.add_argument("--out", help="Output directory (default: $ADVICE_RL_OUT)")
    p.add_argument("--trials", type=int, help="Overrides experiment.trials")
    p.add_argument("--episodes", type=int, help="Overrides experiment.episodes")
    p.add_argument("--budget", type=int, help="Overrides teacher.budget")
    p.add_argument("--teacher", choices=["optimal", "random", "poor", "none"],
                   help="Overrides teacher.quality")
    p.add_argument("--strategy", choices=["mistake", "early"], help="Overrides teacher.strategy")


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="advice_rl",
        description="Budgeted teacher-student action advice experiments.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run an experiment and write its CSV artifacts")
    _add_experiment_flags(run)
    run.add_argument("--jobs", type=int, help="Concurrent trial processes (default: $DEFAULT_JOBS)")
    run.add_argument("--advice-log", action="store_true", help="Also write the advice event log")

    compare = commands.add_parser("compare", help="ANOVA and ordering across result files")
    compare.add_argument("results", nargs="+", help="Results CSVs written by `run`")
    compare.add_argument("--out", help="Directory for comparison.csv (default: $ADVICE_RL_OUT)")
    compare.add_argument("--force", action="store_true",
                         help="Compare even when protocol digests differ")

    oracle = commands.add_parser("oracle", help="Value iteration Q* of a finite domain")
    oracle.add_argument("--config", help="Take domain and gamma from this config")
    oracle.add_argument("--domain", default="linear_chain",
                        choices=["linear_chain", "single_state", "two_state"])
    oracle.add_argument("--length", type=int, default=50, help="Linear Chain length")
    oracle.add_argument("--gamma", type=float, help="Discount (default 0.8 or the config's)")
    oracle.add_argument("--tol", type=float, default=ORACLE_TOLERANCE)
    oracle.add_argument("--out", help="Output file or directory (default: $ADVICE_RL_OUT)")

    check = commands.add_parser("check-assumptions",
                                help="Check the linear-approximation convergence condition")
    _add_experiment_flags(check)

    pretrain = commands.add_parser("pretrain", help="Pre-train a teacher and save its weights")
    _add_experiment_flags(pretrain)
    pretrain.add_argument("--pretrain-episodes", type=int,
                          help="Overrides teacher.pretrain_episodes")

    return parser.parse_args(argv)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = parse_args(argv)
    logger.debug(f"advice_rl {__version__}: {args.command}")
    return anyio.run(run_command, args)


if __name__ == "__main__":
    sys.exit(main())
