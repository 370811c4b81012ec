"""Persisted settings for the mixed braid tools."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

DEFAULTS: Dict[str, Any] = {
    "verify_workers": 1,
    "log_level": "WARNING",
    "unicode_output": False,
    "json_output": False,
}


def _default_config_dir() -> Path:
    override = os.environ.get("MIXEDBRAID_CONFIG_DIR")
    if override:
        return Path(override)
    base = os.environ.get("XDG_CONFIG_HOME")
    if base:
        return Path(base) / "mixed-braids"
    return Path.home() / ".config" / "mixed-braids"


@dataclass
class SettingsPaths:
    config_dir: Path
    settings_file: Path


class SettingsManager:
    """Handles persistence of plain settings in ``settings.json``."""

    SETTINGS_SCHEMA_VERSION = 1

    def __init__(self, config_dir: Optional[Path] = None) -> None:
        base = config_dir or _default_config_dir()
        self.paths = SettingsPaths(config_dir=base, settings_file=base / "settings.json")
        self._settings: Dict[str, Any] = {}
        self._load_settings()
        self._ensure_schema()

    # ------------------------------------------------------------------
    # Public API
    # ------------------------------------------------------------------
    def get(self, key: str, default: Any = None) -> Any:
        return self._settings.get(key, default)

    def set(self, key: str, value: Any) -> None:
        self._settings[key] = value
        self._save_settings()

    def delete(self, key: str) -> None:
        """Drop ``key``; known settings fall back to their default."""
        if key not in self._settings:
            return
        if key in DEFAULTS:
            self._settings[key] = DEFAULTS[key]
        else:
            del self._settings[key]
        self._save_settings()

    # ------------------------------------------------------------------
    # Internal helpers
    # ------------------------------------------------------------------
    def _load_settings(self) -> None:
        try:
            with self.paths.settings_file.open("r", encoding="utf-8") as fh:
                self._settings = json.load(fh)
        except FileNotFoundError:
            self._settings = {}
        except json.JSONDecodeError as exc:
            raise RuntimeError(
                f"{self.paths.settings_file} is corrupted; please repair or delete it."
            ) from exc

    def _save_settings(self) -> None:
        self.paths.config_dir.mkdir(parents=True, exist_ok=True)
        with self.paths.settings_file.open("w", encoding="utf-8") as fh:
            json.dump(self._settings, fh, indent=2, sort_keys=True)

    def _ensure_schema(self) -> None:
        version = int(self._settings.get("schema_version", 0))
        if version < self.SETTINGS_SCHEMA_VERSION:
            self._settings.setdefault("schema_version", self.SETTINGS_SCHEMA_VERSION)
        for key, value in DEFAULTS.items():
            self._settings.setdefault(key, value)


settings_manager = SettingsManager()
