"""Runtime configuration: resource ceilings and report formatting.

Sources, in increasing precedence: built-in defaults, a JSON config
file (path given explicitly or through the TOTSUM_CONFIG environment
variable; the variable carries only the path, never settings), then
command-line flag overrides.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace

OUTPUT_FORMATS = ("csv", "json", "plain")

ENV_CONFIG_PATH = "TOTSUM_CONFIG"


@dataclass(frozen=True)
class Config:
    sieve_limit: int = 10**7
    memory_ceiling: int = 10**8
    output_format: str = "csv"
    precision_digits: int = 15

    def __post_init__(self) -> None:
        if self.sieve_limit < 1:
            raise ValueError(f"sieve_limit={self.sieve_limit} must be positive")
        if self.memory_ceiling < 1:
            raise ValueError(f"memory_ceiling={self.memory_ceiling} must be positive")
        if self.sieve_limit > self.memory_ceiling:
            raise ValueError(
                f"sieve_limit={self.sieve_limit} exceeds memory_ceiling={self.memory_ceiling}"
            )
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(
                f"output_format={self.output_format!r} not one of {OUTPUT_FORMATS}"
            )
        if not 6 <= self.precision_digits <= 30:
            raise ValueError(
                f"precision_digits={self.precision_digits} outside [6, 30]"
            )


def load_config(path: str | None = None, env: dict[str, str] | None = None) -> Config:
    """Load configuration from a JSON file, falling back to defaults.

    When path is None the TOTSUM_CONFIG environment variable is
    consulted for one; when that is also unset, defaults apply.
    Unknown keys in the file are rejected rather than ignored, so
    typos fail loudly.
    """
    if env is None:
        env = dict(os.environ)
    if path is None:
        path = env.get(ENV_CONFIG_PATH)
    if path is None:
        return Config()
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must contain a JSON object")
    known = {f.name for f in fields(Config)}
    unknown = set(data) - known
    if unknown:
        raise ValueError(
            f"config file {path} has unknown key(s): {', '.join(sorted(unknown))}"
        )
    return Config(**data)


def apply_overrides(config: Config, **overrides: object) -> Config:
    """Return config with the non-None overrides applied (flags win)."""
    changes = {k: v for k, v in overrides.items() if v is not None}
    return replace(config, **changes) if changes else config
