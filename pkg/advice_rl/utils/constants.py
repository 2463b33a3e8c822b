"""
Application constants.
"""

# === Linear Chain ===
CHAIN_LENGTH = 50
CHAIN_STEP_CAP = 10_000
LEFT = 0
RIGHT = 1

# === Grid Pursuit ===
PURSUIT_STEP_LIMIT = 2000
PELLET_REWARD = 10.0
COLLISION_REWARD = -500.0
CLEAR_BONUS = 100.0
GHOST_CHASE_PROBABILITY = 0.8
DISTANCE_SENTINEL = 50
UP, DOWN, MOVE_LEFT, MOVE_RIGHT = 0, 1, 2, 3

# === Learners ===
DEFAULT_OMEGA = 0.8
DEFAULT_DIVERGENCE_BOUND = 1e6

# === Oracle ===
ORACLE_TOLERANCE = 1e-10
ORACLE_MAX_ITERATIONS = 1_000_000

# === Harness ===
EVAL_EVERY = 10
EVAL_EPISODES = 30
PRETRAIN_EPISODES = 5000

# === Stats ===
BETA_MAX_ITERATIONS = 200
BETA_TINY = 1e-300
BETA_EPSILON = 1e-15
P_VALUE_FLOOR = 1e-15

# === Artifacts ===
CURVE_HEADER = ("episode", "mean_return", "std_return", "mean_advice_spent")
EVAL_HEADER = ("checkpoint_episode", "mean_eval_return", "std_eval_return")
RESULTS_HEADER = ("group", "FR", "FR_STD", "TR", "TR_STD")
TRIALS_HEADER = ("trial", "seed", "FR", "TR", "convergence_episode")
ADVICE_HEADER = ("episode", "step", "state", "intended", "advised")
