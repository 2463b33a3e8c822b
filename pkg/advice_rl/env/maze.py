"""
Maze asset loader for Grid Pursuit.

Plain-text grid: `#` wall, `.` corridor, `o` corridor with a pellet,
`G` ghost spawn, `P` player spawn. Corridor cells get dense integer ids;
movement tables and all-pairs shortest-path distances are precomputed.
"""

from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import numpy as np

from advice_rl.utils.constants import DOWN, MOVE_LEFT, MOVE_RIGHT, UP
from advice_rl.utils.errors import ConfigError

DEFAULT_MAZE_PATH = Path(__file__).parent / "assets" / "pursuit_maze.txt"

WALL = "#"
CORRIDOR_CHARS = {".", "o", "G", "P"}
GHOST_COUNT = 4

# (row, col) offsets indexed by direction
OFFSETS = {UP: (-1, 0), DOWN: (1, 0), MOVE_LEFT: (0, -1), MOVE_RIGHT: (0, 1)}
REVERSE = {UP: DOWN, DOWN: UP, MOVE_LEFT: MOVE_RIGHT, MOVE_RIGHT: MOVE_LEFT}


@dataclass(frozen=True, eq=False)
class Maze:
    """Static maze structure."""

    width: int
    height: int
    cells: Tuple[Tuple[int, int], ...]
    index: Dict[Tuple[int, int], int]
    neighbors: np.ndarray  # (n_cells, 4), -1 where a wall blocks
    distances: np.ndarray  # (n_cells, n_cells) shortest corridor paths
    pellets: FrozenSet[int]
    ghost_spawns: Tuple[int, ...]
    player_spawn: int

    @property
    def n_cells(self) -> int:
        return len(self.cells)

    def move(self, cell: int, direction: int) -> int:
        """Cell reached by moving in direction; unchanged if blocked."""
        target = self.neighbors[cell, direction]
        return cell if target < 0 else int(target)

    def legal_directions(self, cell: int) -> List[int]:
        return [d for d in range(4) if self.neighbors[cell, d] >= 0]


def _bfs_distances(neighbors: np.ndarray) -> np.ndarray:
    n = neighbors.shape[0]
    distances = np.full((n, n), -1, dtype=np.int64)
    for source in range(n):
        row = distances[source]
        row[source] = 0
        queue = deque([source])
        while queue:
            cell = queue.popleft()
            for target in neighbors[cell]:
                if target >= 0 and row[target] < 0:
                    row[target] = row[cell] + 1
                    queue.append(target)
    return distances


def parse_maze(text: str, source: str = "<string>") -> Maze:
    """
    Build a Maze from its text form.

    Args:
        text: Grid rows separated by newlines
        source: Name used in error messages

    Returns:
        Maze with precomputed movement and distance tables

    Raises:
        ConfigError: non-rectangular grid, unknown characters, missing or
            extra spawns, no pellets, or disconnected corridors
    """
    rows = [line.rstrip("\r") for line in text.splitlines() if line.strip()]
    if not rows:
        raise ConfigError(f"maze {source} is empty")

    width = len(rows[0])
    for number, row in enumerate(rows, start=1):
        if len(row) != width:
            raise ConfigError(
                f"maze {source} is not rectangular: row {number} has "
                f"{len(row)} columns, expected {width}"
            )
        unknown = set(row) - CORRIDOR_CHARS - {WALL}
        if unknown:
            raise ConfigError(f"maze {source} row {number} has unknown characters {sorted(unknown)}")

    cells = [(r, c) for r, row in enumerate(rows) for c, ch in enumerate(row) if ch != WALL]
    index = {cell: i for i, cell in enumerate(cells)}

    ghosts = tuple(index[(r, c)] for r, c in cells if rows[r][c] == "G")
    players = [index[(r, c)] for r, c in cells if rows[r][c] == "P"]
    pellets = frozenset(index[(r, c)] for r, c in cells if rows[r][c] == "o")

    if len(players) != 1:
        raise ConfigError(f"maze {source} needs exactly one player spawn 'P', found {len(players)}")
    if len(ghosts) != GHOST_COUNT:
        raise ConfigError(f"maze {source} needs {GHOST_COUNT} ghost spawns 'G', found {len(ghosts)}")
    if not pellets:
        raise ConfigError(f"maze {source} has no pellets")

    neighbors = np.full((len(cells), 4), -1, dtype=np.int64)
    for i, (r, c) in enumerate(cells):
        for direction, (dr, dc) in OFFSETS.items():
            target = index.get((r + dr, c + dc))
            if target is not None:
                neighbors[i, direction] = target

    distances = _bfs_distances(neighbors)
    if (distances < 0).any():
        raise ConfigError(f"maze {source} has corridor cells unreachable from each other")

    return Maze(
        width=width,
        height=len(rows),
        cells=tuple(cells),
        index=index,
        neighbors=neighbors,
        distances=distances,
        pellets=pellets,
        ghost_spawns=ghosts,
        player_spawn=players[0],
    )


def load_maze(path: Optional[Union[str, Path]] = None) -> Maze:
    """Load a maze file; the shipped 27x15 maze when path is None."""
    maze_path = Path(path) if path else DEFAULT_MAZE_PATH
    try:
        text = maze_path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read maze {maze_path}: {e}") from e
    return parse_maze(text, source=str(maze_path))
