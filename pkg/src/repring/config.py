""" Runtime settings. Values are read from defaults, a `[tool.repring]` table in a TOML file and the environment,
in that order of precedence. """

from __future__ import annotations

import contextlib
import dataclasses
import logging
import os
import typing as t
from pathlib import Path

logger = logging.getLogger(__name__)

ENV_ORDER_CAP = 'REPRING_CAP'
ENV_ENUMERATION_CAP = 'REPRING_ENUMERATION_CAP'


class SettingsError(ValueError):

  def __init__(self, key: str, value: t.Any) -> None:
    self.key = key
    self.value = value

  def __str__(self) -> str:
    return f'invalid value for setting {self.key!r}: {self.value!r}'


@dataclasses.dataclass(frozen=True)
class Settings:

  #: Largest group order that may be constructed from permutation generators.
  order_cap: int = 360

  #: Largest number of candidate vectors a torsion unit enumeration may visit.
  enumeration_cap: int = 10 ** 7

  #: Number of random lattice combinations added to the generators when sampling algebraic maps.
  sample_count: int = 20

  #: Default seed for every randomized routine.
  seed: int = 0

  #: Number of worker threads for batch diagram checks.
  jobs: int = 1

  def replace(self, **kwargs: t.Any) -> Settings:
    return dataclasses.replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _as_int(key: str, value: t.Any) -> int:
  try:
    result = int(value)
  except (TypeError, ValueError):
    raise SettingsError(key, value)
  if result < 0:
    raise SettingsError(key, value)
  return result


def load_settings(config_file: Path | None = None, environ: t.Mapping[str, str] | None = None) -> Settings:
  """ Load settings from *config_file* (a `pyproject.toml` or any TOML file with a `[tool.repring]` table) and the
  environment. A missing file or table is not an error. """

  import tomli

  environ = os.environ if environ is None else environ
  values: dict[str, t.Any] = {}

  if config_file is not None and config_file.is_file():
    data = tomli.loads(config_file.read_text())
    table = data.get('tool', {}).get('repring', {})
    for key, value in table.items():
      field = key.replace('-', '_')
      if field not in {f.name for f in dataclasses.fields(Settings)}:
        logger.warning('Ignoring unknown setting <fg=yellow>%s</fg> in <path>%s</path>', key, config_file)
        continue
      values[field] = _as_int(key, value)

  if ENV_ORDER_CAP in environ:
    values['order_cap'] = _as_int(ENV_ORDER_CAP, environ[ENV_ORDER_CAP])
  if ENV_ENUMERATION_CAP in environ:
    values['enumeration_cap'] = _as_int(ENV_ENUMERATION_CAP, environ[ENV_ENUMERATION_CAP])

  return Settings(**values)


_current: Settings | None = None


def current_settings() -> Settings:
  """ Returns the active settings, loading them from the environment on first use. """

  global _current
  if _current is None:
    _current = load_settings()
  return _current


@contextlib.contextmanager
def use_settings(settings: Settings) -> t.Iterator[Settings]:
  """ Make *settings* the active settings for the duration of the context. """

  global _current
  previous = _current
  _current = settings
  try:
    yield settings
  finally:
    _current = previous
