"""
Configuration settings using Pydantic.

Supports loading from YAML files and environment variables.
"""

from pathlib import Path
from typing import Literal

from pydantic import Field, ValidationError, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from erasure_audit.core.exceptions import ConfigurationError

CellGroups = tuple[tuple[int, int], tuple[int, int]]


class ThermoSettings(BaseSettings):
    """Bath temperature used when heat is reported in joules."""

    temperature_kelvin: float = Field(default=300.0, gt=0)

    model_config = SettingsConfigDict(
        env_prefix="ERASURE_AUDIT_THERMO_",
        env_file=".env",
        extra="ignore",
    )


class MachineSettings(BaseSettings):
    """Numerical knobs for epsilon-machine analysis and sampling."""

    # Constructor check on every (state, choice) row
    row_tolerance: float = 1e-12

    # Damped power iteration
    stationary_tolerance: float = 1e-12
    max_iterations: int = 1_000_000
    damping: float = Field(default=0.5, gt=0, lt=1)

    # Empirical erasure
    bootstrap_resamples: int = 200
    batch_count: int = 100

    model_config = SettingsConfigDict(
        env_prefix="ERASURE_AUDIT_MACHINE_",
        env_file=".env",
        extra="ignore",
    )


class BoxSettings(BaseSettings):
    """Partitioned-box conventions."""

    # Cells grouped by each partition: (side 0 cells, side 1 cells)
    computational_groups: CellGroups = ((0, 1), (2, 3))
    phase_groups: CellGroups = ((0, 2), (1, 3))

    # RAND output over (0,0), (1,0), (1,1)
    rand_probabilities: tuple[float, float, float] = (0.5, 0.25, 0.25)

    max_loop_iterations: int = 10_000

    model_config = SettingsConfigDict(
        env_prefix="ERASURE_AUDIT_BOX_",
        env_file=".env",
        extra="ignore",
    )

    @model_validator(mode="after")
    def _check_conventions(self) -> "BoxSettings":
        for groups in (self.computational_groups, self.phase_groups):
            cells = sorted(groups[0] + groups[1])
            if cells != [0, 1, 2, 3]:
                raise ValueError(f"partition groups must split cells 0..3, got {groups}")
        for side_x in self.computational_groups:
            for side_y in self.phase_groups:
                if len(set(side_x) & set(side_y)) != 1:
                    raise ValueError("the two partitions must jointly isolate every cell")
        if abs(sum(self.rand_probabilities) - 1.0) > 1e-12 or min(self.rand_probabilities) < 0:
            raise ValueError(f"rand_probabilities must be a distribution: {self.rand_probabilities}")
        return self


class Settings(BaseSettings):
    """
    Main application settings.

    Loads from environment variables and optional YAML config.

    Example:
        >>> settings = Settings()
        >>> print(settings.thermo.temperature_kelvin)
        >>> print(settings.box.rand_probabilities)
    """

    config_path: Path | None = None

    # Master seed; per-trial seeds are derived from it
    seed: int = Field(default=0, ge=0, lt=2**64)
    output_format: Literal["json", "csv"] = "json"

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = "INFO"

    # Nested settings
    thermo: ThermoSettings = Field(default_factory=ThermoSettings)
    machine: MachineSettings = Field(default_factory=MachineSettings)
    box: BoxSettings = Field(default_factory=BoxSettings)

    model_config = SettingsConfigDict(
        env_prefix="ERASURE_AUDIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        extra="ignore",
    )


# Global settings instance (lazy-loaded)
_settings: Settings | None = None


def get_settings() -> Settings:
    """
    Get the global settings instance.

    Returns:
        Configured Settings instance
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def configure(config_path: str | Path | None = None, **overrides: object) -> Settings:
    """
    Configure settings with optional YAML file and overrides.

    Args:
        config_path: Path to YAML config file
        **overrides: Direct setting overrides

    Returns:
        Configured Settings instance

    Raises:
        ConfigurationError: If the file or an override fails validation
    """
    global _settings

    kwargs: dict[str, object] = {}
    if config_path:
        from erasure_audit.config.loader import load_yaml_config, merge_configs

        kwargs = load_yaml_config(config_path)
        kwargs["config_path"] = Path(config_path)
        # Override sections merge into the file's sections key by key
        kwargs = merge_configs(kwargs, overrides)
    else:
        kwargs = dict(overrides)

    try:
        _settings = Settings(**kwargs)  # type: ignore[arg-type]
    except ValidationError as e:
        raise ConfigurationError(f"Invalid settings: {e}") from e
    return _settings


def reset_settings() -> None:
    """Drop the cached settings (used by tests)."""
    global _settings
    _settings = None
