"""
Grid Pursuit domain.

A pellet-collecting player chased by four ghosts in a fixed maze. Each
step: the player moves (walls block), eats any pellet on its new cell,
then every ghost moves. Episodes end on capture, on clearing the maze,
or at the step limit.
"""

from dataclasses import dataclass, replace
from functools import cached_property
from typing import FrozenSet, Hashable, Optional, Tuple

import numpy as np

from advice_rl.env.base import Mdp, Transition
from advice_rl.env.maze import REVERSE, Maze, load_maze
from advice_rl.utils.constants import (
    CLEAR_BONUS,
    COLLISION_REWARD,
    GHOST_CHASE_PROBABILITY,
    PELLET_REWARD,
    PURSUIT_STEP_LIMIT,
)
from advice_rl.utils.errors import ContractViolation

NO_HEADING = -1


@dataclass(frozen=True)
class PursuitState:
    """Immutable episode state; cells are maze corridor ids."""

    player: int
    ghosts: Tuple[int, ...]
    headings: Tuple[int, ...]
    pellets: FrozenSet[int]
    steps: int = 0
    caught: bool = False

    @cached_property
    def pellet_ids(self) -> np.ndarray:
        return np.fromiter(sorted(self.pellets), dtype=np.int64, count=len(self.pellets))


def is_pursuit_terminal(state: PursuitState, step_limit: int) -> bool:
    return state.caught or not state.pellets or state.steps >= step_limit


def move_ghosts(
    maze: Maze,
    ghosts: Tuple[int, ...],
    headings: Tuple[int, ...],
    player: int,
    rng: np.random.Generator,
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Move every ghost one cell.

    A ghost never reverses unless the reverse is its only exit. With
    probability GHOST_CHASE_PROBABILITY it takes the move that minimizes the
    shortest-path distance to the player (lowest direction on ties),
    otherwise a uniform random allowed move.
    """
    new_ghosts = []
    new_headings = []
    for ghost, heading in zip(ghosts, headings):
        options = maze.legal_directions(ghost)
        if heading != NO_HEADING and len(options) > 1 and REVERSE[heading] in options:
            options.remove(REVERSE[heading])

        if rng.random() < GHOST_CHASE_PROBABILITY:
            direction = min(
                options,
                key=lambda d: (maze.distances[maze.neighbors[ghost, d], player], d)
            )
        else:
            direction = options[int(rng.integers(len(options)))]

        new_ghosts.append(int(maze.neighbors[ghost, direction]))
        new_headings.append(direction)
    return tuple(new_ghosts), tuple(new_headings)


def pursuit_step(
    maze: Maze,
    state: PursuitState,
    action: int,
    rng: np.random.Generator,
    step_limit: int = PURSUIT_STEP_LIMIT,
) -> Transition:
    """
    Advance a Grid Pursuit episode by one step.

    Rewards: pellet +10; clearing the last pellet adds +100 and ends the
    episode before the ghosts move; capture gives -500 in place of any
    pellet reward.

    Args:
        maze: Static maze
        state: Current non-terminal state
        action: UP, DOWN, LEFT or RIGHT
        rng: Randomness for the ghosts
        step_limit: Episode length cap

    Returns:
        Transition to the next state
    """
    if is_pursuit_terminal(state, step_limit):
        raise ContractViolation("cannot step a terminated pursuit episode")
    if not 0 <= action < 4:
        raise ContractViolation(f"illegal pursuit action {action}")

    player = maze.move(state.player, action)
    pellets = state.pellets
    reward = 0.0
    if player in pellets:
        pellets = pellets - {player}
        reward = PELLET_REWARD

    ghosts, headings = state.ghosts, state.headings
    caught = player in ghosts
    if not caught and pellets:
        ghosts, headings = move_ghosts(maze, ghosts, headings, player, rng)
        caught = any(
            new == player or (new == state.player and old == player)
            for old, new in zip(state.ghosts, ghosts)
        )

    if caught:
        reward = COLLISION_REWARD
    elif not pellets:
        reward += CLEAR_BONUS

    next_state = PursuitState(
        player=player,
        ghosts=ghosts,
        headings=headings,
        pellets=pellets,
        steps=state.steps + 1,
        caught=caught,
    )
    return Transition(state, int(action), reward, next_state,
                      is_pursuit_terminal(next_state, step_limit))


class GridPursuit(Mdp):
    """Grid Pursuit MDP over a loaded maze."""

    n_actions = 4
    r_max = abs(COLLISION_REWARD)

    def __init__(self, maze: Optional[Maze] = None, gamma: float = 0.999,
                 step_limit: int = PURSUIT_STEP_LIMIT):
        self.maze = maze or load_maze()
        self.gamma = gamma
        self.step_limit = step_limit

    def reset(self, rng: np.random.Generator) -> PursuitState:
        ghosts = self.maze.ghost_spawns
        return PursuitState(
            player=self.maze.player_spawn,
            ghosts=ghosts,
            headings=(NO_HEADING,) * len(ghosts),
            pellets=self.maze.pellets,
        )

    def is_terminal(self, state: PursuitState) -> bool:
        return is_pursuit_terminal(state, self.step_limit)

    def step(self, state: PursuitState, action: int, rng: np.random.Generator) -> Transition:
        return pursuit_step(self.maze, state, action, rng, self.step_limit)

    def mixing_key(self, state: PursuitState) -> Hashable:
        return state.player

    def with_positions(self, player: int, ghosts: Tuple[int, ...],
                       pellets: Optional[FrozenSet[int]] = None) -> PursuitState:
        """Build an arbitrary start-like state."""
        base = self.reset(np.random.default_rng(0))
        return replace(
            base,
            player=player,
            ghosts=tuple(ghosts),
            headings=(NO_HEADING,) * len(ghosts),
            pellets=self.maze.pellets if pellets is None else frozenset(pellets),
        )
