"""Where CLI settings come from: the global config file, a project ``.env`` and the environment."""

from __future__ import annotations

import json
import logging
import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path

import yaml
from dotenv import dotenv_values, find_dotenv
from platformdirs import PlatformDirs
from pydantic import TypeAdapter, ValidationError

logger = logging.getLogger(__name__)

CONFIG_SUFFIXES = (".json", ".yaml", ".yml")

ENV_FILE = find_dotenv(usecwd=True, raise_error_if_not_found=False) or ".env"
GLOBAL_CONFIG_DIR = Path(PlatformDirs("desargues").user_config_dir)


def _existing_config(directory: Path) -> Path:
    for suffix in CONFIG_SUFFIXES:
        candidate = directory / f"config{suffix}"
        if candidate.exists():
            return candidate
    return directory / "config.json"


GLOBAL_CONFIG_PATH = _existing_config(GLOBAL_CONFIG_DIR)

# scalar values only; nested tables in the global file are rejected
_GLOBAL_SHAPE = TypeAdapter(dict[str, str | int | float | bool | None])


def _is_yaml(path: Path) -> bool:
    return path.suffix in CONFIG_SUFFIXES[1:]


def load_global_config() -> dict[str, str]:
    """Read the global config file; an unreadable or malformed file counts as empty."""
    path = GLOBAL_CONFIG_PATH
    if not path.exists():
        return {}
    try:
        text = path.read_text()
        raw = yaml.safe_load(text) if _is_yaml(path) else json.loads(text)
        values = _GLOBAL_SHAPE.validate_python(raw or {})
    except (OSError, json.JSONDecodeError, yaml.YAMLError, ValidationError) as exc:
        logger.warning("Ignoring global config %s", path, exc_info=exc)
        return {}
    return {key: str(value) for key, value in values.items() if value is not None}


def save_global_config(cfg: Mapping[str, str]) -> None:
    """Write ``cfg`` to the global config file, readable by the owner only."""
    GLOBAL_CONFIG_DIR.mkdir(parents=True, exist_ok=True, mode=0o700)
    data = dict(sorted(cfg.items()))
    text = yaml.safe_dump(data) if _is_yaml(GLOBAL_CONFIG_PATH) else json.dumps(data, indent=2)
    GLOBAL_CONFIG_PATH.write_text(text)
    if os.name != "nt":
        GLOBAL_CONFIG_PATH.chmod(0o600)


def load_env_file() -> dict[str, str]:
    path = Path(ENV_FILE)
    if not path.exists():
        return {}
    return {key: value for key, value in dotenv_values(path).items() if value is not None}


@dataclass(frozen=True)
class ConfigLayers:
    """The three configuration sources, lowest precedence first."""

    global_config: dict[str, str] = field(default_factory=dict)
    env_file: dict[str, str] = field(default_factory=dict)
    environ: dict[str, str] = field(default_factory=dict)

    @property
    def merged(self) -> dict[str, str]:
        return {**self.global_config, **self.env_file, **self.environ}

    def source_of(self, key: str) -> str | None:
        for name, layer in (("env", self.environ), (".env", self.env_file), ("global", self.global_config)):
            if layer.get(key):
                return name
        return None


def read_layers() -> ConfigLayers:
    return ConfigLayers(load_global_config(), load_env_file(), dict(os.environ))


__all__ = [
    "ConfigLayers",
    "ENV_FILE",
    "GLOBAL_CONFIG_DIR",
    "GLOBAL_CONFIG_PATH",
    "load_env_file",
    "load_global_config",
    "read_layers",
    "save_global_config",
]
