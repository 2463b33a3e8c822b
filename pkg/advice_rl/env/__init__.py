"""Environment package: MDP abstraction and experimental domains."""

from .base import FeatureMap, FiniteMdp, Mdp, OneHotFeatures, Transition
from .features import PursuitFeatures, pursuit_features
from .fixtures import SingleStateMdp, TwoStateMdp
from .linear_chain import LinearChain, linear_chain_step
from .maze import Maze, load_maze, parse_maze
from .pursuit import GridPursuit, PursuitState, move_ghosts, pursuit_step

__all__ = [
    'FeatureMap', 'FiniteMdp', 'Mdp', 'OneHotFeatures', 'Transition',
    'PursuitFeatures', 'pursuit_features',
    'SingleStateMdp', 'TwoStateMdp',
    'LinearChain', 'linear_chain_step',
    'Maze', 'load_maze', 'parse_maze',
    'GridPursuit', 'PursuitState', 'move_ghosts', 'pursuit_step',
]
