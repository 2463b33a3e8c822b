"""
Run manifest and the digest header shared by every artifact.
"""

from typing import List, Optional

from pydantic import BaseModel, Field

from advice_rl import __version__
from advice_rl.utils.errors import ConfigError

DIGEST_PREFIX = "# config_digest="


class RunManifest(BaseModel):
    config_digest: str
    protocol_digest: str
    tool_version: str = __version__
    master_seed: int
    output_paths: List[str] = Field(default_factory=list)
    duration_seconds: float = 0.0

    def to_text(self) -> str:
        lines = [digest_line(self.config_digest, self.protocol_digest)]
        lines.append(f"tool_version={self.tool_version}")
        lines.append(f"master_seed={self.master_seed}")
        lines.append(f"output_paths={','.join(self.output_paths)}")
        lines.append(f"duration_seconds={self.duration_seconds:.3f}")
        return "\n".join(lines) + "\n"


def digest_line(config_digest: str, protocol_digest: Optional[str] = None) -> str:
    line = f"{DIGEST_PREFIX}{config_digest}"
    if protocol_digest:
        line += f" protocol_digest={protocol_digest}"
    return line


def parse_digest_line(line: str) -> dict:
    """{'config_digest': ..., 'protocol_digest': ...} from an artifact's first line."""
    if not line.startswith(DIGEST_PREFIX):
        raise ConfigError(f"artifact does not start with a digest line: {line[:60]!r}")
    fields = {}
    for token in line[2:].split():
        key, _, value = token.partition("=")
        fields[key] = value
    return fields
