"""
Experiment config files.

INI-style text: `[section]` headers and `key = value` lines. Sections map
one-to-one onto the ExperimentConfig models; unknown sections or keys are
rejected, and validation errors name the offending `section.key`.
"""

import configparser
from pathlib import Path
from typing import Any, Dict, Mapping, Optional, Union

from pydantic import ValidationError

from advice_rl.harness.models import ExperimentConfig
from advice_rl.utils.errors import ConfigError

SECTIONS = tuple(ExperimentConfig.model_fields)
Overrides = Mapping[str, Mapping[str, Any]]


def parse_config_text(text: str, source: str = "<string>") -> Dict[str, Dict[str, str]]:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str  # keep key case
    try:
        parser.read_string(text, source=source)
    except configparser.Error as e:
        raise ConfigError(f"{source}: {e}") from e

    raw: Dict[str, Dict[str, str]] = {}
    for section in parser.sections():
        if section not in SECTIONS:
            raise ConfigError(f"{source}: unknown section [{section}]; expected one of {', '.join(SECTIONS)}")
        raw[section] = dict(parser.items(section))
    return raw


def apply_overrides(raw: Dict[str, Dict[str, Any]], overrides: Optional[Overrides]) -> Dict[str, Dict[str, Any]]:
    """Merge command-line values into the raw mapping; None values are skipped."""
    merged = {section: dict(values) for section, values in raw.items()}
    for section, values in (overrides or {}).items():
        for key, value in values.items():
            if value is not None:
                merged.setdefault(section, {})[key] = value
    return merged


def validate_config(raw: Mapping[str, Mapping[str, Any]], source: str = "<string>") -> ExperimentConfig:
    try:
        return ExperimentConfig.model_validate(raw)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or 'config'}: {err['msg']}"
            for err in e.errors()
        )
        raise ConfigError(f"{source}: {problems}") from e


def load_config(path: Union[str, Path], overrides: Optional[Overrides] = None) -> ExperimentConfig:
    """
    Read, override and validate a config file.

    Args:
        path: Config file
        overrides: {section: {key: value}} from command-line flags

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigError: Unreadable file, unknown section/key or invalid value
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    raw = apply_overrides(parse_config_text(text, str(path)), overrides)
    raw.setdefault("experiment", {}).setdefault("group", path.stem)
    return validate_config(raw, str(path))
