"""Operational settings: enumeration cap, default method, strictness.

Precedence for the cap is flag > ``HSNUM_CAP`` > config file > default.
The config file is JSON, e.g. ``{"cap": 1000000, "method": "characters"}``.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .hurwitz import DEFAULT_CAP, METHODS

ENV_CAP = "HSNUM_CAP"
KNOWN_KEYS = {"cap", "method", "strict"}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class Settings:
    cap: int = DEFAULT_CAP
    method: str = "auto"
    strict: bool = False


def default_config_path() -> Path:
    base = os.environ.get("XDG_CONFIG_HOME") or Path.home() / ".config"
    return Path(base) / "hsnum" / "config.json"


def load_config(path: Optional[Path]) -> dict:
    explicit = path is not None
    path = Path(path) if explicit else default_config_path()
    if not path.exists():
        if explicit:
            raise ConfigError(f"config file not found: {path}")
        return {}
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path}: expected a JSON object")
    unknown = set(data) - KNOWN_KEYS
    if unknown:
        raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")
    return data


def _parse_cap(value, source) -> int:
    try:
        cap = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{source}: cap must be an integer, got {value!r}") from None
    if cap < 0:
        raise ConfigError(f"{source}: cap must be nonnegative")
    return cap


def resolve(cap_flag=None, method_flag=None, strict_flag=None,
            config_path=None, environ=None) -> Settings:
    environ = os.environ if environ is None else environ
    data = load_config(config_path)

    if cap_flag is not None:
        cap = cap_flag
    elif environ.get(ENV_CAP):
        cap = _parse_cap(environ[ENV_CAP], ENV_CAP)
    elif "cap" in data:
        cap = _parse_cap(data["cap"], "config")
    else:
        cap = DEFAULT_CAP

    method = method_flag or data.get("method", "auto")
    if method not in METHODS:
        raise ConfigError(f"unknown method {method!r}")
    strict = strict_flag if strict_flag is not None else bool(data.get("strict", False))
    return Settings(cap, method, strict)
