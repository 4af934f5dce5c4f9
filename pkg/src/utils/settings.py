#!/usr/bin/env python3
"""
EFPM Workbench - Settings

Ambient settings (logging, figure size) read from environment variables,
optionally layered over a YAML file named by EFPM_CONFIG. Settings never
change computed results.
"""

import logging
import os
from pathlib import Path
from typing import Any, Dict, Mapping, Optional

import yaml

from models.errors import ConfigError


logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
LOG_FORMATS = ("text", "json")

DEFAULTS: Dict[str, Dict[str, Any]] = {
    "logging": {"level": "WARNING", "format": "text"},
    "plot": {"width": 640, "height": 480, "marker_radius": 3},
}

# (section, key) -> environment variable
ENV_VARS = {
    ("logging", "level"): "EFPM_LOG_LEVEL",
    ("logging", "format"): "EFPM_LOG_FORMAT",
    ("plot", "width"): "EFPM_PLOT_WIDTH",
    ("plot", "height"): "EFPM_PLOT_HEIGHT",
    ("plot", "marker_radius"): "EFPM_PLOT_MARKER_RADIUS",
}


def _load_yaml(path: Path) -> Dict[str, Any]:
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except OSError as e:
        raise ConfigError(f"cannot read settings file {path}: {e.strerror or e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"settings file {path} is not valid YAML: {e}") from e
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"settings file {path} must contain a mapping at the top level")
    for section, values in data.items():
        if section not in DEFAULTS:
            raise ConfigError(f"unknown settings section '{section}' in {path}")
        if not isinstance(values, dict):
            raise ConfigError(f"settings section '{section}' in {path} must be a mapping")
        for key in values:
            if key not in DEFAULTS[section]:
                raise ConfigError(f"unknown setting '{section}.{key}' in {path}")
    return data


def _positive_int(name: str, value: Any) -> int:
    try:
        number = int(str(value).strip())
    except ValueError:
        raise ConfigError(f"{name} must be a positive integer, got {value!r}") from None
    if number <= 0:
        raise ConfigError(f"{name} must be a positive integer, got {value!r}")
    return number


class Settings:
    """Configuration loaded from environment variables and an optional YAML file"""

    def __init__(self, environ: Optional[Mapping[str, str]] = None):
        environ = os.environ if environ is None else environ

        config_path = environ.get("EFPM_CONFIG", "").strip()
        self.config_file: Optional[Path] = Path(config_path) if config_path else None
        file_values = _load_yaml(self.config_file) if self.config_file else {}

        def lookup(section: str, key: str) -> Any:
            env_value = environ.get(ENV_VARS[(section, key)], "").strip()
            if env_value:
                return env_value
            return file_values.get(section, {}).get(key, DEFAULTS[section][key])

        # Logging
        self.log_level = str(lookup("logging", "level")).upper()
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"logging.level must be one of {', '.join(LOG_LEVELS)}, got {self.log_level!r}")
        self.log_format = str(lookup("logging", "format")).lower()
        if self.log_format not in LOG_FORMATS:
            raise ConfigError(f"logging.format must be text or json, got {self.log_format!r}")

        # Figures
        self.plot_width = _positive_int("plot.width", lookup("plot", "width"))
        self.plot_height = _positive_int("plot.height", lookup("plot", "height"))
        self.marker_radius = _positive_int("plot.marker_radius", lookup("plot", "marker_radius"))

    def __repr__(self):
        return (
            f"Settings(\n"
            f"  config_file={self.config_file or 'not set'}\n"
            f"  log_level={self.log_level}\n"
            f"  log_format={self.log_format}\n"
            f"  plot={self.plot_width}x{self.plot_height} marker_radius={self.marker_radius}\n"
            f")"
        )
