"""Tests for the environments and feature maps."""

import numpy as np
import pytest

from advice_rl.env import (
    GridPursuit,
    LinearChain,
    OneHotFeatures,
    PursuitFeatures,
    SingleStateMdp,
    TwoStateMdp,
    linear_chain_step,
    load_maze,
    parse_maze,
    pursuit_step,
)
from advice_rl.env.fixtures import STAY, SWITCH
from advice_rl.utils.constants import LEFT, MOVE_LEFT, RIGHT, UP
from advice_rl.utils.errors import ConfigError, ContractViolation


class TestLinearChain:
    def test_left_at_start_stays(self):
        tr = linear_chain_step(0, LEFT)
        assert (tr.next_state, tr.reward, tr.done) == (0, -1.0, False)

    def test_right_before_goal_terminates(self):
        assert linear_chain_step(47, RIGHT).next_state == 48
        assert not linear_chain_step(47, RIGHT).done
        tr = linear_chain_step(48, RIGHT)
        assert tr.next_state == 49 and tr.done and tr.reward == -1.0

    def test_left_moves_down(self):
        assert linear_chain_step(10, LEFT).next_state == 9

    def test_terminal_step_rejected(self):
        with pytest.raises(ContractViolation):
            linear_chain_step(49, RIGHT)

    def test_illegal_action_rejected(self):
        with pytest.raises(ContractViolation):
            linear_chain_step(3, 2)

    def test_mdp_wrapper(self, rng):
        chain = LinearChain(length=10)
        assert chain.reset(rng) == 0
        assert chain.is_terminal(9) and not chain.is_terminal(8)
        assert chain.outcomes(8, RIGHT) == [(1.0, 9, -1.0)]
        assert chain.max_episode_steps == 10_000

    def test_short_chain_rejected(self):
        with pytest.raises(ContractViolation):
            LinearChain(length=1)


class TestFixtures:
    def test_single_state_self_loop(self, rng):
        mdp = SingleStateMdp(reward=1.0)
        tr = mdp.step(0, 0, rng)
        assert (tr.next_state, tr.reward, tr.done) == (0, 1.0, False)

    def test_two_state_dynamics(self, rng):
        mdp = TwoStateMdp()
        assert mdp.step(0, STAY, rng).next_state == 0
        tr = mdp.step(0, SWITCH, rng)
        assert tr.next_state == 1 and tr.reward == 1.0
        assert mdp.step(1, SWITCH, rng).reward == 0.0

    def test_horizon_sets_episode_cap(self):
        assert TwoStateMdp(horizon=100).max_episode_steps == 100


class TestOneHotFeatures:
    def test_indicator_position(self):
        features = OneHotFeatures(3, 2)
        phi = features(1, 1)
        assert features.dimension == 6
        assert phi.tolist() == [0, 0, 0, 1, 0, 0]

    def test_all_actions_rows(self):
        rows = OneHotFeatures(3, 2).all_actions(2)
        assert rows.shape == (2, 6)
        assert rows[0, 4] == 1.0 and rows[1, 5] == 1.0


class TestMaze:
    def test_shipped_maze(self):
        maze = load_maze()
        assert (maze.width, maze.height) == (27, 15)
        assert len(maze.ghost_spawns) == 4
        assert maze.player_spawn == maze.index[(13, 13)]
        assert len(maze.pellets) == 164

    def test_distances_are_symmetric(self):
        maze = load_maze()
        assert np.array_equal(maze.distances, maze.distances.T)
        assert (maze.distances >= 0).all()

    def test_walls_block_moves(self):
        maze = load_maze()
        corner = maze.index[(1, 1)]
        assert maze.move(corner, MOVE_LEFT) == corner

    @pytest.mark.parametrize("text", [
        "#####\n#GGP#\n#####",             # too few ghosts
        "#####\n#PoP#\n#####",             # two players
        "######\n#GGGGPx#\n",             # ragged and unknown character
    ])
    def test_invalid_mazes_rejected(self, text):
        with pytest.raises(ConfigError):
            parse_maze(text)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_maze(tmp_path / "missing.txt")

    def test_shipped_maze_has_no_dead_ends(self):
        maze = load_maze()
        assert all(len(maze.legal_directions(cell)) >= 2 for cell in range(maze.n_cells))

    def test_shipped_maze_is_mirror_symmetric(self):
        maze = load_maze()
        mirrored = {(r, maze.width - 1 - c) for r, c in maze.cells}
        assert mirrored == set(maze.cells)
        spawns = {maze.cells[g] for g in maze.ghost_spawns}
        assert {(r, maze.width - 1 - c) for r, c in spawns} == spawns

    def test_ghosts_spawn_far_from_the_player(self):
        maze = load_maze()
        spawn_distances = maze.distances[maze.player_spawn, list(maze.ghost_spawns)]
        assert spawn_distances.min() == 26


class TestPursuit:
    @pytest.fixture
    def game(self):
        return GridPursuit()

    def test_reset(self, game, rng):
        state = game.reset(rng)
        assert state.player == game.maze.player_spawn
        assert state.ghosts == game.maze.ghost_spawns
        assert state.pellets == game.maze.pellets
        assert state.steps == 0 and not game.is_terminal(state)

    def test_eating_a_pellet(self, game, rng):
        state = game.reset(rng)
        target = game.maze.index[(13, 12)]
        tr = game.step(state, MOVE_LEFT, rng)
        assert tr.next_state.player == target
        assert tr.reward == 10.0
        assert target not in tr.next_state.pellets
        assert tr.next_state.steps == 1 and not tr.done

    def test_walking_into_a_ghost(self, game, rng):
        maze = game.maze
        ghosts = (maze.index[(13, 12)],) + maze.ghost_spawns[1:]
        state = game.with_positions(maze.player_spawn, ghosts)
        tr = game.step(state, MOVE_LEFT, rng)
        assert tr.reward == -500.0
        assert tr.done and tr.next_state.caught

    def test_clearing_the_maze(self, game, rng):
        maze = game.maze
        last = maze.index[(13, 12)]
        state = game.with_positions(maze.player_spawn, maze.ghost_spawns, {last})
        tr = game.step(state, MOVE_LEFT, rng)
        assert tr.reward == 110.0
        assert tr.done
        assert tr.next_state.ghosts == maze.ghost_spawns

    def test_step_limit(self, rng):
        game = GridPursuit(step_limit=1)
        tr = game.step(game.reset(rng), MOVE_LEFT, rng)
        assert tr.done
        with pytest.raises(ContractViolation):
            pursuit_step(game.maze, tr.next_state, MOVE_LEFT, rng, 1)

    def test_ghost_moves_are_seeded(self, game):
        state = game.reset(np.random.default_rng(0))
        first = game.step(state, MOVE_LEFT, np.random.default_rng(3)).next_state
        second = game.step(state, MOVE_LEFT, np.random.default_rng(3)).next_state
        assert first == second


class TestPursuitFeatures:
    def test_range_and_bias(self, rng):
        game = GridPursuit()
        features = PursuitFeatures(game.maze)
        rows = features.all_actions(game.reset(rng))
        assert rows.shape == (4, 7)
        assert (rows[:, 0] == 1.0).all()
        assert ((rows >= 0.0) & (rows <= 1.0)).all()

    def test_nearby_ghost_counts(self):
        game = GridPursuit()
        maze = game.maze
        ghosts = (maze.index[(13, 11)],) + maze.ghost_spawns[1:]
        state = game.with_positions(maze.player_spawn, ghosts)
        phi = PursuitFeatures(maze)(state, MOVE_LEFT)
        assert phi[4] == 0.25 and phi[5] == 0.25

    def test_no_pellets_uses_sentinel(self):
        game = GridPursuit()
        maze = game.maze
        state = game.with_positions(maze.player_spawn, maze.ghost_spawns, frozenset())
        phi = PursuitFeatures(maze)(state, MOVE_LEFT)
        assert phi[1] == phi[2] == phi[3] == 0.0
        assert phi[6] == pytest.approx(1.0 / 51.0)

    def test_worked_example(self):
        game = GridPursuit()
        maze = game.maze
        pellet, ghost = maze.index[(13, 12)], maze.index[(13, 14)]
        state = game.with_positions(maze.player_spawn, (ghost,) + maze.ghost_spawns[1:], {pellet})
        # moving up is blocked, so the features describe the spawn cell
        phi = PursuitFeatures(maze)(state, UP)
        assert phi.tolist() == pytest.approx([1.0, 0.1, 0.05, 0.025, 0.25, 0.25, 0.5])

    def test_full_rank_on_chosen_states(self):
        game = GridPursuit()
        maze = game.maze
        player, far = maze.player_spawn, maze.ghost_spawns

        def cell(col: int) -> int:
            return maze.index[(13, col)]

        states = [
            game.with_positions(player, far, frozenset()),
            game.with_positions(player, far, {cell(14)}),
            game.with_positions(player, far, {cell(17)}),
            game.with_positions(player, far, {cell(21)}),
            game.with_positions(player, (cell(14),) + far[1:], frozenset()),
            game.with_positions(player, (cell(17),) + far[1:], frozenset()),
            game.with_positions(player, far, {cell(12), cell(14)}),
        ]
        features = PursuitFeatures(maze)
        matrix = np.array([features(state, UP) for state in states])
        assert matrix.shape == (7, 7)
        assert np.linalg.matrix_rank(matrix) == 7
        assert abs(np.linalg.det(matrix)) > 1e-12


class TestPursuitRollouts:
    STEP_LIMIT = 400

    @pytest.fixture(scope="class")
    def episodes(self):
        game = GridPursuit(step_limit=self.STEP_LIMIT)
        rng = np.random.default_rng(99)
        runs = []
        for _ in range(30):
            state = game.reset(rng)
            transitions = []
            while not game.is_terminal(state):
                tr = game.step(state, int(rng.integers(4)), rng)
                transitions.append(tr)
                state = tr.next_state
            runs.append(transitions)
        return game, runs

    def test_pellets_never_reappear(self, episodes):
        _, runs = episodes
        for transitions in runs:
            for tr in transitions:
                assert tr.next_state.pellets <= tr.state.pellets
                assert len(tr.state.pellets) - len(tr.next_state.pellets) <= 1

    def test_everyone_moves_along_corridors(self, episodes):
        game, runs = episodes
        maze = game.maze
        for transitions in runs:
            for tr in transitions:
                before, after = tr.state, tr.next_state
                assert 0 <= after.player < maze.n_cells
                assert maze.distances[before.player, after.player] <= 1
                for old, new in zip(before.ghosts, after.ghosts):
                    assert 0 <= new < maze.n_cells
                    assert maze.distances[old, new] <= 1

    def test_episode_length_within_limit(self, episodes):
        _, runs = episodes
        for transitions in runs:
            assert 1 <= len(transitions) <= self.STEP_LIMIT
            assert [tr.next_state.steps for tr in transitions] == list(range(1, len(transitions) + 1))
            assert transitions[-1].done
            assert not any(tr.done for tr in transitions[:-1])

    def test_capture_needs_the_ghosts_to_close_the_gap(self, episodes):
        game, runs = episodes
        maze = game.maze
        # distance shrinks by at most 2 per step
        head_start = int(maze.distances[maze.player_spawn, list(maze.ghost_spawns)].min()) // 2
        for transitions in runs:
            assert len(transitions) >= head_start

    def test_features_stay_normalized(self, episodes):
        game, runs = episodes
        features = PursuitFeatures(game.maze)
        rows = np.vstack([
            features.all_actions(tr.state) for transitions in runs for tr in transitions[::3]
        ])
        assert rows.shape[1] == 7
        assert ((rows >= 0.0) & (rows <= 1.0)).all()
