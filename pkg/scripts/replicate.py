#!/usr/bin/env python3
"""
Four-teacher replication run.

Runs the optimal, random, none and poor groups of one domain from the
shipped configs, writes their artifacts and the comparison, and prints
the headline checks.

Usage:
    python scripts/replicate.py
    python scripts/replicate.py --domain pursuit --jobs 8 --out results/pursuit

Options:
    --domain    chain (default) or pursuit
    --trials    Override the trial count of every group (quick looks)
    --jobs      Concurrent trial processes (default: $DEFAULT_JOBS)
    --out       Output directory (default: $ADVICE_RL_OUT)
"""

import argparse
import hashlib
import sys
from pathlib import Path

import anyio

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from advice_rl.cli.artifacts import comparison_csv, write_run_artifacts, write_text  # noqa: E402
from advice_rl.cli.config_file import load_config  # noqa: E402
from advice_rl.cli.formatters import render_comparison  # noqa: E402
from advice_rl.cli.manifest import digest_line  # noqa: E402
from advice_rl.config import settings  # noqa: E402
from advice_rl.harness.experiment import run_experiment_async  # noqa: E402
from advice_rl.stats.anova import one_way_anova  # noqa: E402
from advice_rl.stats.curves import summarize_group  # noqa: E402

GROUPS = ("optimal", "random", "none", "poor")
CHAIN_FR_FLOOR = -60.0


async def replicate(domain: str, trials, jobs, out: Path) -> bool:
    print("=" * 60)
    print(f"📈 Teacher replication: {domain}")
    print("=" * 60)

    results = {}
    for group in GROUPS:
        config = load_config(
            project_root / "configs" / f"{domain}_{group}.cfg",
            {"experiment": {"trials": trials}},
        )
        print(f"\n▶️  {group}: {config.experiment.trials} trials x {config.experiment.episodes} episodes")
        result = await run_experiment_async(config, jobs)
        await write_run_artifacts(result, out)
        results[group] = result
        print(f"   FR {result.fr_mean:.2f} ± {result.fr_std:.2f}, TR {result.tr_mean:.2f} ± {result.tr_std:.2f}")

    summaries = sorted(
        (summarize_group(r.group, r.fr_samples, r.auc_samples) for r in results.values()),
        key=lambda s: s.tr,
        reverse=True,
    )
    anova = one_way_anova([r.auc_samples for r in results.values()])
    first = next(iter(results.values()))
    print()
    print(render_comparison(summaries, anova, first.trials, first.episodes), end="")

    combined = hashlib.sha256(",".join(r.config_digest for r in results.values()).encode()).hexdigest()[:16]
    await write_text(out / "comparison.csv",
                     comparison_csv(summaries, anova, digest_line(combined, first.protocol_digest)))

    all_passed = anova.p_value < 0.01
    print(f"\n{'✅' if all_passed else '❌'} ANOVA p < 0.01")
    optimal, poor = results["optimal"].tr_mean, results["poor"].tr_mean
    gap_ok = optimal > poor
    print(f"{'✅' if gap_ok else '❌'} Optimal TR above Poor TR (gap {optimal - poor:.1f})")
    all_passed = all_passed and gap_ok

    if domain == "chain":
        for group, result in results.items():
            tail = min(result.mean_returns[279:], default=float("-inf"))
            ok = tail >= CHAIN_FR_FLOOR
            print(f"{'✅' if ok else '❌'} {group}: mean return from episode 280 on >= {CHAIN_FR_FLOOR} ({tail:.2f})")
            all_passed = all_passed and ok
    else:
        for group, result in results.items():
            ok = result.converged_fraction >= 0.9
            print(f"{'✅' if ok else '❌'} {group}: {result.converged_fraction:.0%} of trials converged")
            all_passed = all_passed and ok

    print("\n" + "=" * 60)
    print("✅ REPLICATION CHECKS PASSED" if all_passed else "❌ SOME REPLICATION CHECKS FAILED")
    print("=" * 60)
    return all_passed


def main() -> int:
    parser = argparse.ArgumentParser(description="Four-teacher replication run")
    parser.add_argument("--domain", choices=["chain", "pursuit"], default="chain")
    parser.add_argument("--trials", type=int, help="Override every group's trial count")
    parser.add_argument("--jobs", type=int, help="Concurrent trial processes")
    parser.add_argument("--out", default=settings.ADVICE_RL_OUT, help="Output directory")
    args = parser.parse_args()

    success = anyio.run(replicate, args.domain, args.trials, args.jobs, Path(args.out))
    return 0 if success else 1


if __name__ == "__main__":
    sys.exit(main())
