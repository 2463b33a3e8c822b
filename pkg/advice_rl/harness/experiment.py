"""
Experiment runner: independent trials in a bounded worker pool, then
aggregation keyed by trial index.
"""

from typing import Dict, List, Optional

import anyio
import numpy as np
from anyio import to_process

from advice_rl.config import settings
from advice_rl.harness.models import AggregateResult, ExperimentConfig, LearningCurve
from advice_rl.harness.seeding import trial_seeds
from advice_rl.harness.trial import prepare_teacher_knowledge, run_trial
from advice_rl.stats.curves import auc
from advice_rl.utils.errors import TrialFailedError
from advice_rl.utils.logger import logger


async def run_trials(
    config: ExperimentConfig,
    seeds: List[int],
    knowledge: Optional[np.ndarray] = None,
    jobs: Optional[int] = None,
) -> List[LearningCurve]:
    """
    Run one trial per seed with at most `jobs` trials in flight.

    Args:
        config: Experiment configuration
        seeds: Per-trial seeds, indexed by trial
        knowledge: Teacher Q-table or weights shared by every trial
        jobs: Worker processes (default from settings); 1 runs in-process

    Returns:
        Curves ordered by trial index

    Raises:
        TrialFailedError: The lowest-index failed trial, wrapping its cause
    """
    jobs = max(1, jobs or settings.effective_jobs)
    curves: Dict[int, LearningCurve] = {}
    failures: Dict[int, BaseException] = {}

    if jobs == 1:
        for index, seed in enumerate(seeds):
            try:
                curves[index] = run_trial(config, seed, index, knowledge)
            except Exception as e:
                failures[index] = e
                break
    else:
        limiter = anyio.CapacityLimiter(jobs)

        async def worker(index: int, seed: int) -> None:
            try:
                curves[index] = await to_process.run_sync(
                    run_trial, config, seed, index, knowledge, limiter=limiter
                )
            except Exception as e:
                failures[index] = e

        async with anyio.create_task_group() as tg:
            for index, seed in enumerate(seeds):
                tg.start_soon(worker, index, seed)

    if failures:
        index = min(failures)
        cause = failures[index]
        logger.error(f"Trial {index} failed: {cause}")
        raise TrialFailedError(index, cause) from cause

    return [curves[index] for index in range(len(seeds))]


def aggregate(config: ExperimentConfig, curves: List[LearningCurve]) -> AggregateResult:
    """Per-episode mean/std and FR/TR statistics (population std)."""
    returns = np.array([c.returns for c in curves])
    spent = np.array([c.advice_spent for c in curves], dtype=float)
    evals = np.array([c.eval_returns for c in curves])
    fr = returns[:, -1]
    tr = np.array([auc(c.returns) for c in curves])

    return AggregateResult(
        group=config.group,
        trials=len(curves),
        episodes=returns.shape[1],
        config_digest=config.config_digest,
        protocol_digest=config.protocol_digest,
        mean_returns=returns.mean(axis=0).tolist(),
        std_returns=returns.std(axis=0).tolist(),
        mean_advice_spent=spent.mean(axis=0).tolist(),
        eval_checkpoints=list(curves[0].eval_checkpoints),
        mean_eval_returns=evals.mean(axis=0).tolist() if evals.size else [],
        std_eval_returns=evals.std(axis=0).tolist() if evals.size else [],
        fr_mean=float(fr.mean()),
        fr_std=float(fr.std()),
        tr_mean=float(tr.mean()),
        tr_std=float(tr.std()),
        seeds=[c.seed for c in curves],
        fr_samples=fr.tolist(),
        auc_samples=tr.tolist(),
        convergence_episodes=[c.convergence_episode for c in curves],
        curves=curves,
    )


async def run_experiment_async(config: ExperimentConfig,
                               jobs: Optional[int] = None) -> AggregateResult:
    experiment = config.experiment
    logger.info(
        f"Starting experiment '{config.group}': {experiment.trials} trials x "
        f"{experiment.episodes} episodes, seed {experiment.seed}"
    )
    knowledge = prepare_teacher_knowledge(config)
    seeds = trial_seeds(experiment.seed, experiment.trials)
    curves = await run_trials(config, seeds, knowledge, jobs)
    result = aggregate(config, curves)
    logger.info(
        f"Experiment '{config.group}' finished: FR={result.fr_mean:.2f}±{result.fr_std:.2f}, "
        f"TR={result.tr_mean:.2f}±{result.tr_std:.2f}"
    )
    return result


def run_experiment(config: ExperimentConfig, jobs: Optional[int] = None) -> AggregateResult:
    """
    Run every trial of an experiment and aggregate.

    The result depends only on the config (master seed included), never on
    `jobs` or on the order trials finish in.
    """
    return anyio.run(run_experiment_async, config, jobs)
