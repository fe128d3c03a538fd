"""
Run configuration, dispatch and report formatting.

``run`` is the whole CLI minus argument parsing: it takes a validated
:class:`RunConfig`, calls the library, and returns the exit status together
with the report text. Reports are deterministic functions of the resolved
configuration; they carry no timestamps or host details.
"""

import csv
import io
import json
import logging
from collections.abc import Iterable
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

import numpy as np
from pydantic import BaseModel, Field, ValidationError, model_validator

from erasure_audit.bounds import bound_report, erasure_table, erased_information
from erasure_audit.config import get_settings
from erasure_audit.core.exceptions import ConfigurationError, ErasureAuditError
from erasure_audit.core.result import MachineReport, SimulationReport
from erasure_audit.mechanics import (
    EpsilonMachine,
    dump_machine,
    empirical_erasure,
    load_machine,
    mean_erased_information,
    sample_trajectory,
    state_frequencies,
    stationary,
    statistical_complexity,
)
from erasure_audit.presets import get_preset
from erasure_audit.qubit import build_dyadic_machine
from erasure_audit.szilard import run_audit

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64

SIGNIFICANT_DIGITS = 12

Subcommand = Literal["bound", "machine", "simulate", "box"]


class RunConfig(BaseModel):
    """
    Everything one CLI invocation needs, after defaults are resolved.

    Example:
        >>> config = RunConfig.resolve(subcommand="bound", n=1)
        >>> run(config).exit_code
        0
    """

    subcommand: Subcommand
    seed: int = Field(default=0, ge=0, lt=2**64)
    output_format: Literal["json", "csv"] = "json"
    temperature_kelvin: float = Field(default=300.0, gt=0)

    # bound
    n: int | None = Field(default=None, ge=0)
    n_max: int | None = Field(default=None, ge=1)

    # machine / simulate
    machine_file: Path | None = None
    preset: str | None = None
    dyadic: int | None = Field(default=None, ge=1)
    emit: Path | None = None
    steps: int | None = Field(default=None, ge=1)

    # box
    protocol: str | None = None
    policy: str = "honest"
    trials: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_subcommand(self) -> "RunConfig":
        if self.subcommand == "machine":
            sources = [self.machine_file, self.preset, self.dyadic]
            if sum(s is not None for s in sources) != 1:
                raise ValueError("machine needs exactly one of --file, --preset, --dyadic")
        if self.subcommand == "simulate" and self.dyadic is None:
            raise ValueError("simulate needs --dyadic")
        if self.subcommand == "box" and self.protocol is None:
            raise ValueError("box needs --protocol")
        return self

    @classmethod
    def resolve(cls, **values: Any) -> "RunConfig":
        """
        Build a config, filling unset values from settings.

        Raises:
            ConfigurationError: If a value is outside its documented range
        """
        settings = get_settings()
        defaults = {
            "seed": settings.seed,
            "output_format": settings.output_format,
            "temperature_kelvin": settings.thermo.temperature_kelvin,
        }
        merged = {**defaults, **{k: v for k, v in values.items() if v is not None}}
        try:
            return cls(**merged)
        except ValidationError as e:
            raise ConfigurationError(f"Invalid run configuration: {e}") from e

    def provenance(self) -> dict[str, Any]:
        """Run parameters plus the settings they were resolved against."""
        settings = get_settings().model_dump(mode="json", exclude={"config_path"})
        return {"run": self.model_dump(mode="json"), "settings": settings}


@dataclass(frozen=True)
class RunResult:
    exit_code: int
    report: str


# === Formatting ===


def _significant(value: Any) -> Any:
    """Round every float in a nested structure to 12 significant digits."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, dict):
        return {str(k): _significant(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_significant(v) for v in value]
    return value


def _flatten(row: dict[str, Any], prefix: str = "") -> dict[str, Any]:
    flat: dict[str, Any] = {}
    for key, value in row.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, list):
            continue
        else:
            flat[name] = value
    return flat


def _rows(result: dict[str, Any]) -> list[dict[str, Any]]:
    """
    CSV rows for one result.

    A result holding a list of records (a trial's ledger) becomes one row per
    record, each repeating the result's scalar columns.
    """
    base = _flatten(result)
    for key, value in result.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            return [{**base, **_flatten(record, f"{key}.")} for record in value]
    return [base]


def _cell(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, bool):
        return str(value).lower()
    return "" if value is None else str(value)


def format_report(payload: dict[str, Any], output_format: str) -> str:
    """
    Render a report.

    JSON carries the full payload. CSV carries one row per result, or one
    row per ledger entry for box trials; config and summary values go into
    leading ``#`` comment lines.
    """
    payload = _significant(payload)
    if output_format == "json":
        return json.dumps(payload, indent=2) + "\n"

    buffer = io.StringIO()
    for section in ("config", "summary"):
        for key, value in _flatten(payload.get(section, {})).items():
            buffer.write(f"# {section}.{key}={_cell(value)}\n")

    rows = [row for r in payload.get("results", []) for row in _rows(r)]
    fieldnames: list[str] = []
    for row in rows:
        fieldnames.extend(k for k in row if k not in fieldnames)
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(v) for k, v in row.items()})
    return buffer.getvalue()


def _payload(config: RunConfig, results: Iterable[dict[str, Any]], **extra: Any) -> dict[str, Any]:
    return {
        "command": config.subcommand,
        "config": config.provenance(),
        **extra,
        "results": list(results),
    }


# === Subcommands ===


def _run_bound(config: RunConfig) -> tuple[int, dict[str, Any]]:
    if config.n_max is not None:
        start = 1 if config.n is None else config.n
        rows = erasure_table(range(start, config.n_max + 1), config.temperature_kelvin)
    else:
        rows = [bound_report(1 if config.n is None else config.n, config.temperature_kelvin)]
    return EXIT_OK, _payload(config, (r.to_dict() for r in rows))


def _select_machine(config: RunConfig) -> tuple[str, EpsilonMachine, float | None]:
    if config.machine_file is not None:
        return str(config.machine_file), load_machine(config.machine_file), None
    if config.preset is not None:
        preset = get_preset(config.preset)
        return preset.name, preset.build(), preset.erased_bits
    assert config.dyadic is not None
    machine = build_dyadic_machine(config.dyadic)
    return f"dyadic-{config.dyadic}", machine, erased_information(config.dyadic).value


def _run_machine(config: RunConfig) -> tuple[int, dict[str, Any]]:
    name, machine, expected = _select_machine(config)
    if config.emit is not None:
        dump_machine(machine, config.emit)

    pi = stationary(machine)
    report = MachineReport(
        name=name,
        n_states=machine.n_states,
        n_choices=machine.n_choices,
        n_outcomes=machine.n_outcomes,
        n_transitions=machine.n_transitions,
        unifilar=machine.is_unifilar,
        statistical_complexity_bits=statistical_complexity(machine).value,
        erased_bits=mean_erased_information(machine).value,
        stationary={str(k): v for k, v in pi.as_dict().items()},
        expected_erased_bits=expected,
    )
    return EXIT_OK, _payload(config, [report.to_dict()])


def _run_simulate(config: RunConfig) -> tuple[int, dict[str, Any]]:
    assert config.dyadic is not None
    steps = config.steps or 100_000
    machine = build_dyadic_machine(config.dyadic)
    record = sample_trajectory(machine, machine.states[0], steps, config.seed)
    estimate = empirical_erasure(record, machine)
    visits = state_frequencies(record, machine)

    expected = 1.0 / machine.n_states
    deviation = np.divide(
        np.abs(visits.frequencies - expected),
        visits.standard_errors,
        out=np.zeros(machine.n_states),
        where=visits.standard_errors > 0,
    )
    report = SimulationReport(
        n=config.dyadic,
        steps=steps,
        seed=config.seed,
        analytic_erased_bits=erased_information(config.dyadic).value,
        empirical_erased_bits=estimate.estimate.value,
        standard_error_bits=estimate.standard_error,
        excluded_states=estimate.excluded_states,
        max_frequency_deviation_se=float(deviation.max()),
    )
    return EXIT_OK, _payload(config, [report.to_dict()])


def _run_box(config: RunConfig) -> tuple[int, dict[str, Any]]:
    assert config.protocol is not None
    audit = run_audit(config.protocol, config.policy, config.seed, config.trials)
    code = EXIT_VIOLATION if audit.violation_flag else EXIT_OK
    payload = _payload(
        config,
        (t.to_dict() for t in audit.trials),
        summary=audit.summary(),
    )
    return code, payload


DISPATCH = {
    "bound": _run_bound,
    "machine": _run_machine,
    "simulate": _run_simulate,
    "box": _run_box,
}


def run(config: RunConfig) -> RunResult:
    """
    Dispatch ``config`` and render its report.

    Exit status is 0 on success, 1 on any library error and 2 when a box
    audit raised its violation flag. The report is empty on error; the error
    itself is logged.
    """
    logger.debug(f"Running {config.subcommand} with {config.model_dump(mode='json')}")
    try:
        code, payload = DISPATCH[config.subcommand](config)
    except ErasureAuditError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return RunResult(EXIT_ERROR, "")
    return RunResult(code, format_report(payload, config.output_format))
