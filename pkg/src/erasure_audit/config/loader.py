"""
Configuration loader utilities.

Supports YAML and environment-based configuration.
"""

from pathlib import Path
from typing import Any

import yaml

from erasure_audit.core.exceptions import ConfigurationError

# Sections that map onto nested settings models
NESTED_SECTIONS = ("thermo", "machine", "box")


def load_yaml_config(path: str | Path) -> dict[str, Any]:
    """
    Load configuration from a YAML file.

    Args:
        path: Path to YAML config file

    Returns:
        Configuration dictionary

    Raises:
        ConfigurationError: If the file is missing or is not a mapping
    """
    path = Path(path)
    if not path.exists():
        raise ConfigurationError(f"Config file not found: {path}")

    with open(path) as f:
        config = yaml.safe_load(f)

    if config is None:
        return {}
    if not isinstance(config, dict):
        raise ConfigurationError(f"Config file must contain a mapping: {path}")
    return _flatten_config(config)


def _flatten_config(config: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    """
    Flatten nested config into settings-compatible format.

    Converts:
        {"run": {"seed": 7}, "box": {"max_loop_iterations": 100}}
    To:
        {"seed": 7, "box": {"max_loop_iterations": 100}}

    The ``run`` section is unwrapped without a prefix.
    """
    result: dict[str, Any] = {}

    for key, value in config.items():
        if isinstance(value, dict):
            if key in NESTED_SECTIONS:
                result[key] = value
            elif key == "run":
                result.update(_flatten_config(value, prefix))
            else:
                result.update(_flatten_config(value, f"{prefix}{key}_"))
        else:
            result[f"{prefix}{key}"] = value

    return result


def merge_configs(*configs: dict[str, Any]) -> dict[str, Any]:
    """
    Deep merge multiple configuration dictionaries.

    Later configs override earlier ones.

    Args:
        *configs: Configuration dictionaries to merge

    Returns:
        Merged configuration
    """
    result: dict[str, Any] = {}

    for config in configs:
        for key, value in config.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = merge_configs(result[key], value)
            else:
                result[key] = value

    return result
