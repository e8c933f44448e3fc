
from pathlib import Path

import pytest

from repring.config import Settings, SettingsError, current_settings, load_settings, use_settings


def test_load_settings_defaults_without_file() -> None:
  assert load_settings(None, environ={}) == Settings()


def test_load_settings_reads_tool_table(tmp_path: Path) -> None:
  config = tmp_path / 'pyproject.toml'
  config.write_text('[tool.repring]\norder-cap = 48\nenumeration-cap = 1000\nseed = 7\n')
  settings = load_settings(config, environ={})
  assert settings.order_cap == 48
  assert settings.enumeration_cap == 1000
  assert settings.seed == 7
  assert settings.jobs == 1


def test_load_settings_environment_takes_precedence(tmp_path: Path) -> None:
  config = tmp_path / 'pyproject.toml'
  config.write_text('[tool.repring]\norder-cap = 48\n')
  settings = load_settings(config, environ={'REPRING_CAP': '24', 'REPRING_ENUMERATION_CAP': '5'})
  assert settings.order_cap == 24
  assert settings.enumeration_cap == 5


def test_load_settings_ignores_unknown_keys(tmp_path: Path) -> None:
  config = tmp_path / 'repring.toml'
  config.write_text('[tool.repring]\nspam = 1\n')
  assert load_settings(config, environ={}) == Settings()


def test_load_settings_rejects_bad_values(tmp_path: Path) -> None:
  config = tmp_path / 'pyproject.toml'
  config.write_text('[tool.repring]\norder-cap = "many"\n')
  with pytest.raises(SettingsError):
    load_settings(config, environ={})
  with pytest.raises(SettingsError):
    load_settings(None, environ={'REPRING_CAP': '-1'})


def test_replace_skips_none() -> None:
  settings = Settings().replace(order_cap=None, jobs=4)
  assert settings.order_cap == Settings().order_cap
  assert settings.jobs == 4


def test_use_settings_restores_previous() -> None:
  before = current_settings()
  with use_settings(Settings(order_cap=12)) as settings:
    assert current_settings() is settings
  assert current_settings() is before
