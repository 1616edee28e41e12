"""
Run settings from a TOML file, the environment and explicit overrides.

Precedence, highest first: overrides (command line flags), ``ADDSPEC_*``
environment variables, the config file, built-in defaults.

Example ``addspec.toml``::

    [addspec]
    workers = 4
    budget = 2000000000
"""

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Mapping, Optional

try:
    import tomllib
except ModuleNotFoundError:
    import tomli as tomllib

from loguru import logger as _logger

from addspec.core import DEFAULT_CAPACITY, MAX_CAPACITY
from addspec.exceptions import ConfigError
from addspec.spectrum import DEFAULT_BUDGET, DEFAULT_EXTREMAL_LIMIT
from addspec.utils import available_parallelism, parse_positive_int

ENV_PREFIX = "ADDSPEC_"
CONFIG_ENV = ENV_PREFIX + "CONFIG"
DEFAULT_CONFIG_FILE = "addspec.toml"


@dataclass(frozen=True)
class Settings:
    capacity: int = DEFAULT_CAPACITY
    workers: int = 1
    budget: int = DEFAULT_BUDGET
    extremal_limit: int = DEFAULT_EXTREMAL_LIMIT


_KEYS = tuple(f.name for f in fields(Settings))


def _validated(values: Mapping[str, Any], origin: str) -> dict:
    out = {}
    for key, raw in values.items():
        if key not in _KEYS:
            raise ConfigError(f"{origin}: unknown setting '{key}'")
        if isinstance(raw, bool):
            raise ConfigError(f"{origin}: {key} must be an integer, got {raw!r}")
        try:
            value = parse_positive_int(raw, key)
        except ValueError as exc:
            raise ConfigError(f"{origin}: {exc}") from exc
        if key == "capacity" and value > MAX_CAPACITY:
            raise ConfigError(
                f"{origin}: capacity must be at most {MAX_CAPACITY}, got {value}"
            )
        out[key] = value
    return out


def _find_config_file(path, env: Mapping[str, str]) -> Optional[Path]:
    if path is not None:
        return Path(path)
    if env.get(CONFIG_ENV):
        return Path(env[CONFIG_ENV])
    local = Path(DEFAULT_CONFIG_FILE)
    return local if local.is_file() else None


def _read_file(path: Path) -> dict:
    try:
        with open(path, "rb") as fobj:
            data = tomllib.load(fobj)
    except tomllib.TOMLDecodeError as exc:
        # the decoder message carries line and column
        raise ConfigError(f"{path}: malformed TOML: {exc}") from exc
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read config file: {exc}") from exc
    table = data.pop("addspec", {})
    if not isinstance(table, dict):
        raise ConfigError(f"{path}: [addspec] must be a table")
    data.update(table)
    return _validated(data, str(path))


def _read_env(env: Mapping[str, str]) -> dict:
    values = {}
    for key in _KEYS:
        name = ENV_PREFIX + key.upper()
        if env.get(name, "").strip():
            values[key] = env[name]
    return _validated(values, "environment")


def load_config(
    path=None,
    env: Optional[Mapping[str, str]] = None,
    overrides: Optional[Mapping[str, Any]] = None,
) -> Settings:
    """Resolve the run settings.

    Args:
        path: config file; defaults to ``$ADDSPEC_CONFIG``, then
            ``./addspec.toml`` if it exists
        env: environment mapping, ``os.environ`` if omitted
        overrides: explicit values; ``None`` entries are ignored

    Raises:
        ConfigError: unreadable file, unknown key or invalid value
    """
    env = os.environ if env is None else env
    settings = Settings(workers=available_parallelism())

    config_file = _find_config_file(path, env)
    if config_file is not None:
        _logger.debug(f"Reading configuration from {config_file}")
        settings = replace(settings, **_read_file(config_file))
    settings = replace(settings, **_read_env(env))
    if overrides:
        given = {k: v for k, v in overrides.items() if v is not None}
        settings = replace(settings, **_validated(given, "command line"))
    return settings
