"""Runtime configuration: environment first, then settings.json, then defaults."""

from __future__ import annotations

import logging
import os
from typing import Any, Dict

from services.settings import DEFAULTS, settings_manager

_manager = settings_manager

_TRUE = {"1", "true", "yes", "on"}


def _env_int(name: str, key: str) -> int:
    raw = os.environ.get(name)
    if raw is not None:
        try:
            return int(raw)
        except ValueError:
            raise RuntimeError(f"{name} must be an integer, got {raw!r}") from None
    return int(_manager.get(key, DEFAULTS[key]))


def _env_bool(name: str, key: str) -> bool:
    raw = os.environ.get(name)
    if raw is not None:
        return raw.strip().lower() in _TRUE
    return bool(_manager.get(key, DEFAULTS[key]))


VERIFY_WORKERS = max(1, _env_int("MIXEDBRAID_WORKERS", "verify_workers"))
LOG_LEVEL = (os.environ.get("MIXEDBRAID_LOG_LEVEL") or _manager.get("log_level") or "WARNING").upper()
UNICODE_OUTPUT = _env_bool("MIXEDBRAID_UNICODE", "unicode_output")
JSON_OUTPUT = _env_bool("MIXEDBRAID_JSON", "json_output")

SETTABLE_KEYS = tuple(DEFAULTS)


def coerce_setting(key: str, raw: str) -> Any:
    """Turn command-line text into the type the setting is stored as."""
    if key not in DEFAULTS:
        raise ValueError(f"Unknown setting {key!r}; choose from {', '.join(SETTABLE_KEYS)}")
    default = DEFAULTS[key]
    if isinstance(default, bool):
        return raw.strip().lower() in _TRUE
    if isinstance(default, int):
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"{key} must be an integer, got {raw!r}") from None
        if key == "verify_workers" and value < 1:
            raise ValueError("verify_workers must be at least 1")
        return value
    if key == "log_level":
        level = raw.strip().upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ValueError(f"Unknown log level {raw!r}")
        return level
    return raw


def save_setting(key: str, raw: str) -> Any:
    value = coerce_setting(key, raw)
    _manager.set(key, value)
    global VERIFY_WORKERS, LOG_LEVEL, UNICODE_OUTPUT, JSON_OUTPUT
    if key == "verify_workers":
        VERIFY_WORKERS = value
    elif key == "log_level":
        LOG_LEVEL = value
    elif key == "unicode_output":
        UNICODE_OUTPUT = value
    elif key == "json_output":
        JSON_OUTPUT = value
    return value


def current_settings() -> Dict[str, Any]:
    return {
        "config_dir": str(_manager.paths.config_dir),
        "verify_workers": VERIFY_WORKERS,
        "log_level": LOG_LEVEL,
        "unicode_output": UNICODE_OUTPUT,
        "json_output": JSON_OUTPUT,
    }
