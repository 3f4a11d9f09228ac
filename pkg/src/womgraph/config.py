"""Flat key-value configuration with strict validation.

Precedence: built-in defaults < config file < command-line flags.
The config path may also come from the WOMGRAPH_CONFIG environment
variable when --config is not given.
"""

import os
from dataclasses import dataclass, fields, replace

from .errors import ConfigError

ENV_VAR = "WOMGRAPH_CONFIG"


@dataclass(frozen=True)
class Config:
    alpha: float = 20.0
    weight_like_on_comment: float = 1.0
    weight_like: float = 2.0
    weight_comment: float = 4.0
    weight_share: float = 8.0
    damping: float = 0.85
    tol: float = 1e-10
    max_iter: int = 200
    k: int = 20
    r: int = 3
    th: int = 50
    min_pair_count: int = 2
    top_n_per_word: int = 50
    stopwords_path: str = ""
    stem_rules_path: str = ""
    topic: str = ""
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.alpha < 0:
            raise ConfigError("alpha must be >= 0")
        for name in ("weight_like_on_comment", "weight_like", "weight_comment", "weight_share"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if not 0.0 < self.damping < 1.0:
            raise ConfigError("damping must lie in (0, 1)")
        if self.tol <= 0 or self.max_iter < 1:
            raise ConfigError("tol must be > 0 and max_iter >= 1")
        if not (self.k >= self.r >= 1) or self.th < 1:
            raise ConfigError("need k >= r >= 1 and th >= 1")
        if self.min_pair_count < 1 or self.top_n_per_word < 1:
            raise ConfigError("min_pair_count and top_n_per_word must be >= 1")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")


_FIELD_TYPES = {f.name: f.type for f in fields(Config)}


def _coerce(name, raw):
    kind = _FIELD_TYPES[name]
    try:
        if kind in (int, "int"):
            return int(raw)
        if kind in (float, "float"):
            return float(raw)
        return raw
    except ValueError as exc:
        raise ConfigError(f"bad value for {name!r}: {raw!r}") from exc


def load_config(path) -> Config:
    """Parse key=value lines; unknown keys are an error."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{line_no}: expected key=value, got {line!r}")
            key, _, raw = line.partition("=")
            key = key.strip()
            if key not in _FIELD_TYPES:
                raise ConfigError(f"{path}:{line_no}: unknown key {key!r}")
            values[key] = _coerce(key, raw.strip())
    return Config(**values)


def resolve_config(explicit_path=None, overrides=None) -> Config:
    """Defaults, then the config file (flag or env var), then overrides."""
    path = explicit_path or os.environ.get(ENV_VAR)
    cfg = load_config(path) if path else Config()
    if overrides:
        unknown = set(overrides) - set(_FIELD_TYPES)
        if unknown:
            raise ConfigError(f"unknown config overrides: {sorted(unknown)}")
        cfg = replace(cfg, **overrides)
    return cfg
