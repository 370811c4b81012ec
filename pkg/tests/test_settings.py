import json

import pytest

import braid_config
from services.settings import DEFAULTS, SettingsManager


def test_defaults_without_touching_disk(tmp_path):
    manager = SettingsManager(tmp_path / "fresh")
    assert manager.get("verify_workers") == DEFAULTS["verify_workers"]
    assert manager.get("schema_version") == SettingsManager.SETTINGS_SCHEMA_VERSION
    assert not (tmp_path / "fresh").exists()


def test_values_persist(tmp_path):
    manager = SettingsManager(tmp_path)
    manager.set("verify_workers", 4)
    assert json.loads((tmp_path / "settings.json").read_text())["verify_workers"] == 4
    assert SettingsManager(tmp_path).get("verify_workers") == 4
    manager.delete("verify_workers")
    assert SettingsManager(tmp_path).get("verify_workers") == DEFAULTS["verify_workers"]


def test_delete_restores_defaults(tmp_path):
    manager = SettingsManager(tmp_path)
    manager.set("log_level", "DEBUG")
    manager.set("scratch", 1)
    manager.delete("log_level")
    manager.delete("scratch")
    manager.delete("never_set")
    assert manager.get("log_level") == DEFAULTS["log_level"]
    assert manager.get("scratch") is None
    stored = json.loads((tmp_path / "settings.json").read_text())
    assert stored["log_level"] == DEFAULTS["log_level"]
    assert "scratch" not in stored


def test_corrupted_file(tmp_path):
    (tmp_path / "settings.json").write_text("{not json")
    with pytest.raises(RuntimeError):
        SettingsManager(tmp_path)


def test_coerce_setting():
    assert braid_config.coerce_setting("verify_workers", "3") == 3
    assert braid_config.coerce_setting("unicode_output", "yes") is True
    assert braid_config.coerce_setting("json_output", "off") is False
    assert braid_config.coerce_setting("log_level", "debug") == "DEBUG"
    with pytest.raises(ValueError):
        braid_config.coerce_setting("verify_workers", "0")
    with pytest.raises(ValueError):
        braid_config.coerce_setting("verify_workers", "many")
    with pytest.raises(ValueError):
        braid_config.coerce_setting("log_level", "chatty")
    with pytest.raises(ValueError):
        braid_config.coerce_setting("colour", "red")


def test_save_setting_updates_runtime_values(tmp_path, monkeypatch):
    monkeypatch.setattr(braid_config, "_manager", SettingsManager(tmp_path))
    monkeypatch.setattr(braid_config, "VERIFY_WORKERS", braid_config.VERIFY_WORKERS)
    assert braid_config.save_setting("verify_workers", "5") == 5
    assert braid_config.VERIFY_WORKERS == 5
    assert braid_config.current_settings()["verify_workers"] == 5
    assert braid_config.current_settings()["config_dir"] == str(tmp_path)
