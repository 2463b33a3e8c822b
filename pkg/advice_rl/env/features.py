"""
Grid Pursuit feature map.

Seven object counts around the cell the player would occupy after the
action, each normalized into [0, 1]:

    0  bias
    1  pellets within distance 2   (capped at 10, / 10)
    2  pellets within distance 5   (capped at 20, / 20)
    3  pellets within distance 10  (capped at 40, / 40)
    4  ghosts within distance 2    (/ 4)
    5  ghosts within distance 5    (/ 4)
    6  1 / (1 + distance to nearest pellet), sentinel 50 without pellets

Distances are shortest corridor paths.
"""

import numpy as np

from advice_rl.env.base import FeatureMap
from advice_rl.env.maze import Maze
from advice_rl.env.pursuit import PursuitState
from advice_rl.utils.constants import DISTANCE_SENTINEL
from advice_rl.utils.errors import ContractViolation

PELLET_RADII = ((2, 10.0), (5, 20.0), (10, 40.0))
GHOST_RADII = (2, 5)
GHOST_NORMALIZER = 4.0


def pursuit_features(maze: Maze, state: PursuitState, action: int) -> np.ndarray:
    """
    Feature vector of (state, action).

    Args:
        maze: Static maze the state lives in
        state: Pursuit state
        action: One of the 4 moves; a blocked move evaluates the current cell

    Returns:
        Length-7 vector in [0, 1]
    """
    if not 0 <= action < 4:
        raise ContractViolation(f"illegal pursuit action {action}")

    cell = maze.move(state.player, action)
    row = maze.distances[cell]
    features = np.zeros(7)
    features[0] = 1.0

    if state.pellets:
        pellet_distances = row[state.pellet_ids]
        for slot, (radius, cap) in enumerate(PELLET_RADII, start=1):
            count = int(np.count_nonzero(pellet_distances <= radius))
            features[slot] = min(count, cap) / cap
        nearest = int(pellet_distances.min())
    else:
        nearest = DISTANCE_SENTINEL

    ghost_distances = row[list(state.ghosts)]
    for slot, radius in enumerate(GHOST_RADII, start=4):
        features[slot] = np.count_nonzero(ghost_distances <= radius) / GHOST_NORMALIZER

    features[6] = 1.0 / (1.0 + nearest)
    return features


class PursuitFeatures(FeatureMap):
    """FeatureMap wrapper around pursuit_features."""

    dimension = 7
    n_actions = 4

    def __init__(self, maze: Maze):
        self.maze = maze

    def __call__(self, state: PursuitState, action: int) -> np.ndarray:
        return pursuit_features(self.maze, state, action)
