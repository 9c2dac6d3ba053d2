"""
Settings loader for projcodes

Loads limits and defaults from codes_config.yaml and applies environment
overrides (a .env file is honoured through python-dotenv).

Priority order:
1. Environment variables (PROJCODES_*)
2. .env file
3. codes_config.yaml (or the file named by PROJCODES_CONFIG)
4. Built-in defaults

Usage:
    settings = get_settings()
    cap = settings.limit("cap_verify")
"""

import os
import copy
from pathlib import Path
from typing import Optional, Any
from dataclasses import dataclass, field

import yaml
from dotenv import load_dotenv

from projcodes.errors import ConfigError


CONFIG_PATH = Path(__file__).parent / "codes_config.yaml"

DEFAULTS: dict[str, dict[str, Any]] = {
    "limits": {
        "max_field_order_table": 1 << 16,
        "max_field_order": 1 << 20,
        "max_n": 16,
        "max_q": 16,
        "max_rank_codewords": 1 << 20,
        "cap_enum": 100000,
        "cap_verify": 5000,
        "sample_trials": 100000,
    },
    "defaults": {
        "seed": 0,
        "metric": "injection",
        "format": "json",
        "output_dir": "out",
    },
    "logging": {
        "run_log": True,
        "log_level": "INFO",
        "log_file": "projcodes_runs.log",
        "log_dir": None,
    },
}

ENV_OVERRIDES = {
    "PROJCODES_LOG_DIR": ("logging", "log_dir", str),
    "PROJCODES_LOG_LEVEL": ("logging", "log_level", str),
    "PROJCODES_SEED": ("defaults", "seed", int),
}


@dataclass
class Settings:
    """Resolved configuration with the file it came from."""
    data: dict[str, dict[str, Any]]
    source: str = "defaults"
    overrides: list[str] = field(default_factory=list)

    def limit(self, name: str) -> int:
        return int(self.data["limits"][name])

    def default(self, name: str) -> Any:
        return self.data["defaults"][name]

    def section(self, name: str) -> dict[str, Any]:
        return dict(self.data.get(name, {}))


def load_settings(config_path: Optional[str] = None, env_file: Optional[str] = None) -> Settings:
    """
    Build a Settings object.

    Args:
        config_path: YAML file; falls back to PROJCODES_CONFIG, then the
            packaged codes_config.yaml
        env_file: .env file to load before reading overrides

    Raises:
        ConfigError: If the YAML file exists but cannot be parsed
    """
    if env_file:
        load_dotenv(env_file)
    else:
        load_dotenv()

    data = copy.deepcopy(DEFAULTS)
    path = Path(config_path or os.environ.get("PROJCODES_CONFIG") or CONFIG_PATH)
    source = "defaults"

    if path.exists():
        try:
            loaded = yaml.safe_load(path.read_text()) or {}
        except yaml.YAMLError as e:
            raise ConfigError(f"Cannot parse {path}: {e}", module="cli", code="CONFIG") from e
        if not isinstance(loaded, dict):
            raise ConfigError(f"{path} must hold a mapping", module="cli", code="CONFIG")
        for section, values in loaded.items():
            if isinstance(values, dict):
                data.setdefault(section, {}).update(values)
        source = str(path)

    overrides = []
    for env_key, (section, key, cast) in ENV_OVERRIDES.items():
        value = os.environ.get(env_key)
        if value:
            try:
                data[section][key] = cast(value)
            except ValueError as e:
                raise ConfigError(f"{env_key}={value!r} is not valid", module="cli", code="CONFIG") from e
            overrides.append(env_key)

    return Settings(data=data, source=source, overrides=overrides)


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create the global settings."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def reset_settings(settings: Optional[Settings] = None):
    """Replace (or clear) the global settings; used by the CLI and tests."""
    global _settings
    _settings = settings


def get_limit(name: str) -> int:
    """Convenience function to read a limit."""
    return get_settings().limit(name)


def get_default(name: str) -> Any:
    """Convenience function to read a command default."""
    return get_settings().default(name)
