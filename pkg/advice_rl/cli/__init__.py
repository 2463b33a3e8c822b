"""Command-line front end: config files, artifacts and commands."""

from .commands import (
    EXIT_CONFIG,
    EXIT_DEGENERATE,
    EXIT_DIVERGENCE,
    EXIT_ERROR,
    EXIT_OK,
    exit_code_for,
    run_command,
)
from .config_file import load_config, parse_config_text, validate_config
from .manifest import RunManifest, digest_line

__all__ = [
    'EXIT_CONFIG', 'EXIT_DEGENERATE', 'EXIT_DIVERGENCE', 'EXIT_ERROR', 'EXIT_OK',
    'exit_code_for', 'run_command',
    'load_config', 'parse_config_text', 'validate_config',
    'RunManifest', 'digest_line',
]
