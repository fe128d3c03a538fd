"""
Erasure Audit CLI.

Reports go to stdout; logs go to stderr through rich.
"""

import importlib
import logging
from pathlib import Path
from typing import Optional

import click
import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from erasure_audit.cli.runner import EXIT_ERROR, EXIT_USAGE, RunConfig, run
from erasure_audit.config import configure, get_settings
from erasure_audit.core import ErasureAuditError, ProtocolRegistry
from erasure_audit.presets import get_preset, list_presets as list_machine_presets

app = typer.Typer(
    name="erasure-audit",
    help="Erased-information bounds, epsilon-machines and partitioned-box audits",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)


def _parser_exceptions(name: str) -> tuple[type[Exception], ...]:
    """
    Exception class ``name`` from click, plus typer's bundled copy of click
    on typer releases that ship one.
    """
    found: list[type[Exception]] = [getattr(click.exceptions, name)]
    try:
        bundled = importlib.import_module("typer._click.exceptions")
    except ImportError:
        return tuple(found)
    extra = getattr(bundled, name, None)
    if isinstance(extra, type) and extra not in found:
        found.append(extra)
    return tuple(found)


USAGE_ERRORS = _parser_exceptions("UsageError")
ABORT_ERRORS = _parser_exceptions("Abort")


def setup_logging(verbose: bool = False) -> None:
    """Configure logging with rich output on stderr."""
    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, rich_tracebacks=True)],
    )


def _execute(**values: object) -> None:
    try:
        config = RunConfig.resolve(**values)
    except ErasureAuditError as e:
        err_console.print(f"[red]{e}[/red]")
        raise typer.Exit(EXIT_ERROR)
    result = run(config)
    if result.report:
        typer.echo(result.report, nl=False)
    raise typer.Exit(result.exit_code)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable debug logging"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="Config file path"),
):
    """Erasure Audit CLI."""
    if config:
        try:
            configure(config_path=config)
        except ErasureAuditError as e:
            err_console.print(f"[red]{e}[/red]")
            raise typer.Exit(EXIT_ERROR)
    setup_logging(verbose)


# === Commands ===


@app.command()
def bound(
    n: Optional[int] = typer.Option(None, "--n", help="Family index (default 1)"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Tabulate n .. n-max"),
    temperature: Optional[float] = typer.Option(
        None, "--temperature", "-T", help="Bath temperature in kelvin"
    ),
    output_format: Optional[str] = typer.Option(None, "--format", "-f", help="json or csv"),
):
    """Exact erased information and its Landauer heat."""
    _execute(
        subcommand="bound",
        n=n,
        n_max=n_max,
        temperature_kelvin=temperature,
        output_format=output_format,
    )


@app.command()
def machine(
    file: Optional[Path] = typer.Option(None, "--file", help="Machine-definition YAML"),
    dyadic: Optional[int] = typer.Option(None, "--dyadic", help="Dyadic qubit machine index"),
    preset: Optional[str] = typer.Option(None, "--preset", "-p", help="Named machine preset"),
    emit: Optional[Path] = typer.Option(None, "--emit", help="Write the machine definition here"),
    output_format: Optional[str] = typer.Option(None, "--format", "-f", help="json or csv"),
):
    """Stationary analysis of an epsilon-machine."""
    _execute(
        subcommand="machine",
        machine_file=file,
        dyadic=dyadic,
        preset=preset,
        emit=emit,
        output_format=output_format,
    )


@app.command()
def simulate(
    dyadic: int = typer.Option(..., "--dyadic", help="Dyadic qubit machine index"),
    steps: Optional[int] = typer.Option(None, "--steps", help="Trajectory length (default 1e5)"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed"),
    output_format: Optional[str] = typer.Option(None, "--format", "-f", help="json or csv"),
):
    """Monte Carlo check of the erased information of a dyadic machine."""
    _execute(
        subcommand="simulate",
        dyadic=dyadic,
        steps=steps,
        seed=seed,
        output_format=output_format,
    )


@app.command()
def box(
    protocol: str = typer.Option(..., "--protocol", help="repeatability, reset, rand, perpetuum"),
    policy: str = typer.Option("honest", "--policy", help="honest or pt-free"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Master seed"),
    trials: int = typer.Option(1, "--trials", help="Number of seeded trials"),
    output_format: Optional[str] = typer.Option(None, "--format", "-f", help="json or csv"),
):
    """Run a partitioned-box protocol and audit its ledger."""
    _execute(
        subcommand="box",
        protocol=protocol,
        policy=policy,
        seed=seed,
        trials=trials,
        output_format=output_format,
    )


@app.command("list-presets")
def list_presets():
    """List machine presets and box protocols."""
    table = Table(title="Machine Presets")
    table.add_column("Name", style="cyan")
    table.add_column("Description")
    table.add_column("C_mu (bits)", justify="right")
    table.add_column("Erased (bits)", justify="right")
    for name in list_machine_presets():
        preset = get_preset(name)
        table.add_row(
            name,
            preset.description,
            "-" if preset.complexity_bits is None else f"{preset.complexity_bits:.6g}",
            "-" if preset.erased_bits is None else f"{preset.erased_bits:.6g}",
        )
    console.print(table)

    console.print("\n[bold]Box Protocols:[/bold]")
    for name in ProtocolRegistry.list_protocols():
        console.print(f"  • {name}: {ProtocolRegistry.get(name).description}")


def cli(argv: list[str] | None = None) -> int:
    """
    Entry point for the CLI.

    Returns the exit status: 0 ok, 1 library error, 2 violation flag raised,
    64 usage error.
    """
    try:
        rv = app(args=argv, standalone_mode=False)
    except USAGE_ERRORS as e:
        e.show()  # type: ignore[attr-defined]
        return EXIT_USAGE
    except ABORT_ERRORS:
        return EXIT_ERROR
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    raise SystemExit(cli())
