"""
Sampling check of the linear-approximation convergence condition.

Sigma_pi is the feature second moment E[phi(s, a) phi(s, a)^T] under the
behaviour policy; Sigma*(theta) replaces a with the action that is greedy
with respect to theta. The condition holds for theta when
Sigma_pi - gamma^2 Sigma*(theta) is positive definite.
"""

from collections import Counter
from typing import Optional, Sequence

import numpy as np

from advice_rl.env.base import FeatureMap, Mdp
from advice_rl.harness.factory import build_env, build_features, build_policy
from advice_rl.harness.models import AssumptionReport, ExperimentConfig
from advice_rl.harness.seeding import ASSUMPTION_STREAM
from advice_rl.policies.policy import Policy
from advice_rl.utils.errors import AssumptionError, ConfigError
from advice_rl.utils.logger import logger

EIGENVALUE_TOLERANCE = 1e-12


def _total_variation(first: Counter, second: Counter) -> float:
    n1, n2 = sum(first.values()), sum(second.values())
    if n1 == 0 or n2 == 0:
        return 0.0
    keys = set(first) | set(second)
    return 0.5 * sum(abs(first[k] / n1 - second[k] / n2) for k in keys)


def check_fa_assumptions(
    env: Mdp,
    policy: Policy,
    feature_map: FeatureMap,
    gamma: float,
    theta_probes: Sequence[np.ndarray],
    sample_count: int,
    rng: np.random.Generator,
    burn_in: int = 0,
    behavior_theta: Optional[np.ndarray] = None,
) -> AssumptionReport:
    """
    Estimate Sigma_pi and Sigma*(theta) from one on-policy rollout.

    Args:
        env: Domain; the rollout restarts whenever an episode ends
        policy: Behaviour policy over Q = phi . behavior_theta
        feature_map: phi(s, a) of dimension d
        gamma: Discount in [0, 1]
        theta_probes: Parameter vectors to test
        sample_count: Samples kept after burn-in, >= 10 d^2
        rng: Generator driving the rollout
        burn_in: Leading steps discarded
        behavior_theta: Parameters the behaviour policy is greedy about (zeros by default)

    Returns:
        AssumptionReport with one verdict per probe

    Raises:
        AssumptionError: Too few samples, bad probe shapes, or an action
            with zero behaviour probability at a visited state
    """
    d = feature_map.dimension
    if not 0.0 <= gamma <= 1.0:
        raise AssumptionError(f"gamma must be in [0, 1], got {gamma}")
    if sample_count < 10 * d * d:
        raise AssumptionError(f"sample_count {sample_count} is below 10 * d^2 = {10 * d * d}")
    probes = [np.asarray(theta, dtype=float) for theta in theta_probes]
    for theta in probes:
        if theta.shape != (d,):
            raise AssumptionError(f"probe shape {theta.shape} does not match dimension {d}")
    behavior = np.zeros(d) if behavior_theta is None else np.asarray(behavior_theta, dtype=float)

    sigma_pi = np.zeros((d, d))
    sigma_star = [np.zeros((d, d)) for _ in probes]
    halves = (Counter(), Counter())

    state = env.reset(rng)
    for t in range(burn_in + sample_count):
        if env.is_terminal(state):
            state = env.reset(rng)
        rows = feature_map.all_actions(state)
        probabilities = policy.probabilities(rows @ behavior, 0)
        if np.any(probabilities <= 0.0):
            raise AssumptionError(
                f"behaviour policy gives zero probability to an action at state {env.mixing_key(state)}"
            )
        action = int(rng.choice(len(probabilities), p=probabilities))

        if t >= burn_in:
            phi = rows[action]
            sigma_pi += np.outer(phi, phi)
            for k, theta in enumerate(probes):
                greedy_phi = rows[int(np.argmax(rows @ theta))]
                sigma_star[k] += np.outer(greedy_phi, greedy_phi)
            halves[0 if t - burn_in < sample_count // 2 else 1][env.mixing_key(state)] += 1

        state = env.step(state, action, rng).next_state

    sigma_pi = _symmetrize(sigma_pi / sample_count)
    sigma_star = [_symmetrize(s / sample_count) for s in sigma_star]
    eigenvalues = [float(np.linalg.eigvalsh(sigma_pi - gamma ** 2 * s).min()) for s in sigma_star]
    verdicts = [e > EIGENVALUE_TOLERANCE for e in eigenvalues]
    tv = _total_variation(*halves)

    logger.info(
        f"Assumption check: d={d}, {sample_count} samples, "
        f"{sum(verdicts)}/{len(verdicts)} probes pass, TV proxy {tv:.4f}"
    )
    return AssumptionReport(
        gamma=gamma,
        sample_count=sample_count,
        sigma_pi=sigma_pi.tolist(),
        probes=[theta.tolist() for theta in probes],
        sigma_star=[s.tolist() for s in sigma_star],
        min_eigenvalues=eigenvalues,
        verdicts=verdicts,
        tv_distance=tv,
    )


def _symmetrize(matrix: np.ndarray) -> np.ndarray:
    return 0.5 * (matrix + matrix.T)


def default_probes(dimension: int, count: int, scale: float,
                   rng: np.random.Generator) -> list:
    """theta = 0 followed by `count` Gaussian probes."""
    return [np.zeros(dimension)] + [rng.normal(0.0, scale, dimension) for _ in range(count)]


def check_config_assumptions(config: ExperimentConfig) -> AssumptionReport:
    """Run the checker with the domain, policy and features a config describes."""
    if not config.learner.is_linear:
        raise ConfigError("learner.kind: the assumption check needs a linear learner")
    env = build_env(config.domain, config.learner.gamma)
    features = build_features(env)
    rng = np.random.default_rng([config.experiment.seed, ASSUMPTION_STREAM])
    checks = config.assumptions
    return check_fa_assumptions(
        env,
        build_policy(config.policy),
        features,
        config.learner.gamma,
        default_probes(features.dimension, checks.probe_count, checks.probe_scale, rng),
        checks.sample_count,
        rng,
        burn_in=checks.burn_in,
    )
