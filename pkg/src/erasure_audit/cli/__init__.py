"""CLI module."""

from erasure_audit.cli.main import app, cli
from erasure_audit.cli.runner import RunConfig, RunResult, format_report, run

__all__ = ["app", "cli", "RunConfig", "RunResult", "format_report", "run"]
