"""Run configuration shared by the CLI and the verification suite."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

CONFIG_ENV = "BISPINOR_CONFIG"


@dataclass(frozen=True)
class Config:
    tol_abs: float = 1e-10
    tol_rel: float = 1e-8
    fd_step: float = 1e-5
    richardson_step: float = 1e-2
    samples: int = 1000
    seed: int = 42

    def __post_init__(self):
        for name in ("tol_abs", "tol_rel", "fd_step", "richardson_step"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")

    def to_dict(self) -> dict:
        return asdict(self)

    def updated(self, **overrides) -> "Config":
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def field_names() -> list[str]:
    return [f.name for f in fields(Config)]


def load_config(path: str | os.PathLike | None = None) -> Config:
    """Read a JSON config; ``path`` falls back to ``$BISPINOR_CONFIG``."""
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return Config()
    data = json.loads(Path(path).read_text())
    unknown = set(data) - set(field_names())
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return Config(**data)
