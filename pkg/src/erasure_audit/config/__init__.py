"""Configuration module exports."""

from erasure_audit.config.loader import load_yaml_config, merge_configs
from erasure_audit.config.settings import (
    BoxSettings,
    MachineSettings,
    Settings,
    ThermoSettings,
    configure,
    get_settings,
    reset_settings,
)

__all__ = [
    "Settings",
    "ThermoSettings",
    "MachineSettings",
    "BoxSettings",
    "get_settings",
    "configure",
    "reset_settings",
    "load_yaml_config",
    "merge_configs",
]
