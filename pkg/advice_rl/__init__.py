"""
advice_rl - budgeted teacher-student action advice for reinforcement learning.

Main application package.
"""

__version__ = "1.0.0"
