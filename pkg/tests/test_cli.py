"""Tests for config files, artifacts and the command-line entry point."""

from pathlib import Path

import numpy as np
import pytest

from advice_rl.cli import EXIT_CONFIG, EXIT_DEGENERATE, EXIT_DIVERGENCE, EXIT_OK, load_config
from advice_rl.cli.artifacts import parse_results_csv, results_csv
from advice_rl.cli.config_file import parse_config_text, validate_config
from advice_rl.config import settings
from advice_rl.harness import TrialRunner, run_experiment
from advice_rl.learners import parse_snapshot
from advice_rl.main import main
from advice_rl.utils.errors import ConfigError

CONFIGS = Path(__file__).resolve().parent.parent / "configs"

SMALL_CHAIN = """
[domain]
name = linear_chain
chain_length = 10

[learner]
kind = {kind}
gamma = 0.8
alpha = 0.9
{extra}

[policy]
kind = epsilon_greedy
epsilon = 0.1

[teacher]
quality = {quality}
strategy = mistake
budget = 1000

[experiment]
trials = 3
episodes = 10
eval_every = 0
seed = 5
"""


def write_config(directory: Path, name: str, quality: str = "none", kind: str = "q_tabular",
                 extra: str = "") -> Path:
    path = directory / f"{name}.cfg"
    path.write_text(SMALL_CHAIN.format(quality=quality, kind=kind, extra=extra))
    return path


class TestConfigFiles:
    def test_load_and_group_from_file_name(self, tmp_path):
        config = load_config(write_config(tmp_path, "chain_optimal", quality="optimal"))
        assert config.teacher.quality.value == "correct"
        assert config.group == "chain_optimal"
        assert config.domain.chain_length == 10

    def test_overrides(self, tmp_path):
        path = write_config(tmp_path, "g")
        config = load_config(path, {"experiment": {"seed": 99, "trials": None},
                                    "teacher": {"quality": "poor"}})
        assert config.experiment.seed == 99 and config.experiment.trials == 3
        assert config.teacher.quality.value == "poor"

    def test_invalid_gamma_names_field(self, tmp_path):
        path = write_config(tmp_path, "bad")
        path.write_text(path.read_text().replace("gamma = 0.8", "gamma = 1.2"))
        with pytest.raises(ConfigError, match="learner.gamma"):
            load_config(path)

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="learner.colour"):
            validate_config(parse_config_text("[learner]\ncolour = blue\n"))

    def test_unknown_section_rejected(self):
        with pytest.raises(ConfigError, match="unknown section"):
            parse_config_text("[rewards]\nscale = 2\n")

    def test_tabular_pursuit_rejected(self):
        with pytest.raises(ConfigError):
            validate_config(parse_config_text("[domain]\nname = grid_pursuit\n"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(tmp_path / "absent.cfg")

    def test_digest_ignores_formatting_and_defaults(self):
        plain = validate_config(parse_config_text("[learner]\ngamma = 0.8\n"))
        spelled = validate_config(parse_config_text(
            "# comment\n[learner]\ngamma=0.80\nkind = q_tabular\n\n[teacher]\nbudget = 0\n"
        ))
        assert plain.config_digest == spelled.config_digest

    def test_protocol_digest_ignores_teacher_setting(self, tmp_path):
        optimal = load_config(write_config(tmp_path, "a", quality="optimal"))
        poor = load_config(write_config(tmp_path, "b", quality="poor"))
        reseeded = load_config(write_config(tmp_path, "c", quality="poor"), {"experiment": {"seed": 6}})
        assert optimal.config_digest != poor.config_digest
        assert optimal.protocol_digest == poor.protocol_digest
        assert reseeded.protocol_digest != poor.protocol_digest

    def test_shipped_configs_are_valid(self):
        for path in CONFIGS.glob("*.cfg"):
            assert load_config(path).group

    def test_copy_under_another_name_keeps_digests(self, tmp_path):
        original = CONFIGS / "chain_optimal.cfg"
        copy = tmp_path / "elsewhere" / "renamed.cfg"
        copy.parent.mkdir()
        copy.write_text(original.read_text())
        first, second = load_config(original), load_config(copy)
        assert first.group != second.group
        assert first.config_digest == second.config_digest
        assert first.protocol_digest == second.protocol_digest

    def test_environment_does_not_reach_the_digest(self, tmp_path, monkeypatch):
        path = write_config(tmp_path, "g", kind="q_linear")
        before = load_config(path)
        monkeypatch.setenv("DIVERGENCE_BOUND", "5")
        after = load_config(path)
        assert after.learner.divergence_bound == 1e6
        assert after.config_digest == before.config_digest

    def test_initial_q_rejected_for_linear_learner(self, tmp_path):
        path = write_config(tmp_path, "g", kind="q_linear", extra="initial_q = -5.0")
        with pytest.raises(ConfigError, match="initial_q"):
            load_config(path)

    def test_chain_configs_start_pessimistic(self):
        config = load_config(CONFIGS / "chain_none.cfg")
        runner = TrialRunner(config, 1)
        assert runner.policy.tie_break == "random"
        assert np.all(runner.student.q.values == -5.0)
        assert not runner.student.q.visits.any()


class TestArtifacts:
    def test_results_file_parses_back(self, tmp_path):
        config = load_config(write_config(tmp_path, "chain_random", quality="random"))
        result = run_experiment(config)
        parsed = parse_results_csv(results_csv(result))
        assert parsed.group == "chain_random"
        assert parsed.episodes == 10
        assert parsed.tr_samples == result.auc_samples
        assert parsed.seeds == result.seeds
        assert parsed.protocol_digest == config.protocol_digest


class TestRunCommand:
    def test_writes_four_artifacts(self, tmp_path):
        out = tmp_path / "results"
        code = main(["run", "--config", str(write_config(tmp_path, "chain_optimal", "optimal")),
                     "--seed", "7", "--out", str(out)])
        assert code == EXIT_OK
        names = sorted(p.name for p in out.iterdir())
        assert names == ["chain_optimal_curve.csv", "chain_optimal_eval.csv",
                         "chain_optimal_manifest.txt", "chain_optimal_results.csv"]
        for path in out.iterdir():
            assert path.read_text().startswith("# config_digest=")
        header = (out / "chain_optimal_curve.csv").read_text().splitlines()[1]
        assert header == "episode,mean_return,std_return,mean_advice_spent"

    def test_rerun_is_byte_identical(self, tmp_path):
        config = write_config(tmp_path, "chain_random", "random")
        for name in ("first", "second"):
            assert main(["run", "--config", str(config), "--seed", "7",
                         "--out", str(tmp_path / name)]) == EXIT_OK
        for csv_name in ("chain_random_curve.csv", "chain_random_eval.csv", "chain_random_results.csv"):
            assert (tmp_path / "first" / csv_name).read_bytes() == (tmp_path / "second" / csv_name).read_bytes()

    def test_advice_log(self, tmp_path):
        out = tmp_path / "out"
        main(["run", "--config", str(write_config(tmp_path, "g", "optimal")), "--out", str(out),
              "--advice-log", "--budget", "5"])
        lines = (out / "g_advice.csv").read_text().splitlines()
        assert lines[1] == "episode,step,state,intended,advised"
        events = [line for line in lines[2:] if not line.startswith("#")]
        assert 0 < len(events) <= 15

    def test_invalid_config_exit_status(self, tmp_path, capsys):
        path = write_config(tmp_path, "bad")
        path.write_text(path.read_text().replace("gamma = 0.8", "gamma = 1.2"))
        assert main(["run", "--config", str(path), "--out", str(tmp_path)]) == EXIT_CONFIG
        assert "gamma" in capsys.readouterr().out

    def test_divergence_exit_status(self, tmp_path):
        path = write_config(tmp_path, "diverge", kind="q_linear", extra="divergence_bound = 0.5")
        assert main(["run", "--config", str(path), "--out", str(tmp_path)]) == EXIT_DIVERGENCE

    def test_env_default_out_dir(self, tmp_path, monkeypatch):
        monkeypatch.setattr(settings, "ADVICE_RL_OUT", str(tmp_path / "env_out"))
        assert main(["run", "--config", str(write_config(tmp_path, "g"))]) == EXIT_OK
        assert (tmp_path / "env_out" / "g_results.csv").exists()


class TestCompareCommand:
    @pytest.fixture
    def runs(self, tmp_path):
        out = tmp_path / "out"
        for name, quality in (("chain_optimal", "optimal"), ("chain_poor", "poor")):
            assert main(["run", "--config", str(write_config(tmp_path, name, quality)),
                         "--out", str(out)]) == EXIT_OK
        return out

    def test_orders_groups_and_writes_anova(self, runs, capsys):
        capsys.readouterr()
        code = main(["compare", str(runs / "chain_poor_results.csv"),
                     str(runs / "chain_optimal_results.csv"), "--out", str(runs)])
        assert code == EXIT_OK
        assert "Ordering by mean TR: chain_optimal > chain_poor" in capsys.readouterr().out
        lines = (runs / "comparison.csv").read_text().splitlines()
        assert lines[0].startswith("# config_digest=")
        assert lines[1] == "group,FR,FR_STD,TR,TR_STD"
        assert lines[2].startswith("chain_optimal,")
        assert lines[-1].startswith("anova,")

    def test_duplicate_input_is_degenerate(self, runs):
        path = str(runs / "chain_poor_results.csv")
        assert main(["compare", path, path, "--out", str(runs)]) == EXIT_DEGENERATE

    def test_mismatched_episodes_rejected(self, runs, tmp_path):
        main(["run", "--config", str(write_config(tmp_path, "longer")), "--episodes", "12",
              "--out", str(runs)])
        code = main(["compare", str(runs / "chain_poor_results.csv"),
                     str(runs / "longer_results.csv"), "--out", str(runs)])
        assert code == EXIT_CONFIG

    def test_protocol_mismatch_needs_force(self, runs, tmp_path):
        main(["run", "--config", str(write_config(tmp_path, "reseeded")), "--seed", "8",
              "--out", str(runs)])
        args = ["compare", str(runs / "chain_poor_results.csv"), str(runs / "reseeded_results.csv"),
                "--out", str(runs)]
        assert main(args) == EXIT_CONFIG
        assert main(args + ["--force"]) == EXIT_OK

    def test_separated_groups_report_tiny_p(self, tmp_path, capsys):
        paths = []
        for group, tr in (("fast", -90.0), ("slow", -200.0)):
            path = tmp_path / f"{group}_results.csv"
            path.write_text(
                "# config_digest=abc protocol_digest=ppp\n# episodes=10\n"
                f"group,FR,FR_STD,TR,TR_STD\n{group},-9.0,0.0,{tr},0.0\n# trials\n"
                "trial,seed,FR,TR,convergence_episode\n"
                f"0,1,-9.0,{tr},\n1,2,-9.0,{tr},\n"
            )
            paths.append(str(path))
        assert main(["compare", *paths, "--out", str(tmp_path)]) == EXIT_OK
        assert "p < 1e-15" in capsys.readouterr().out


class TestOracleCommand:
    def test_chain_q_star(self, tmp_path):
        path = tmp_path / "q.csv"
        assert main(["oracle", "--gamma", "0.8", "--out", str(path)]) == EXIT_OK
        text = path.read_text()
        assert text.startswith("# config_digest=")
        q = parse_snapshot(text)
        assert q.shape == (50, 2)
        assert abs(q[48, 1] + 1.0) <= 1e-9

    def test_myopic_case(self, tmp_path):
        assert main(["oracle", "--gamma", "0", "--out", str(tmp_path)]) == EXIT_OK
        q = parse_snapshot((tmp_path / "oracle_q.csv").read_text())
        assert np.all(q[:49] == -1.0)

    def test_non_finite_gamma(self, tmp_path):
        assert main(["oracle", "--gamma", "nan", "--out", str(tmp_path)]) == EXIT_CONFIG

    def test_pursuit_is_not_finite(self, tmp_path):
        code = main(["oracle", "--config", str(CONFIGS / "pursuit_none.cfg"), "--out", str(tmp_path)])
        assert code == EXIT_CONFIG


class TestCheckAssumptionsCommand:
    def test_two_state_fixture(self, tmp_path, capsys):
        code = main(["check-assumptions", "--config", str(CONFIGS / "two_state.cfg"),
                     "--out", str(tmp_path)])
        assert code == EXIT_OK
        output = capsys.readouterr().out
        assert "probe 0: min_eigenvalue" in output and "verdict = pass" in output
        assert (tmp_path / "two_state_assumptions.txt").read_text().startswith("# config_digest=")

    def test_single_state_fixture(self, tmp_path, capsys):
        assert main(["check-assumptions", "--config", str(CONFIGS / "single_state.cfg"),
                     "--out", str(tmp_path)]) == EXIT_OK
        assert "verdict = fail" not in capsys.readouterr().out

    def test_tabular_learner_rejected(self, tmp_path):
        code = main(["check-assumptions", "--config", str(write_config(tmp_path, "tab")),
                     "--out", str(tmp_path)])
        assert code == EXIT_CONFIG


def test_pretrain_command_writes_weights(tmp_path):
    config = write_config(tmp_path, "teacher", kind="sarsa_linear")
    assert main(["pretrain", "--config", str(config), "--pretrain-episodes", "3",
                 "--out", str(tmp_path)]) == EXIT_OK
    theta = parse_snapshot((tmp_path / "teacher_teacher_weights.csv").read_text())
    assert theta.shape == (20,)
