"""Shared fixtures."""

import pytest

from erasure_audit.config import reset_settings
from erasure_audit.mechanics import EpsilonMachine
from erasure_audit.presets import GOLDEN_MEAN, SYMMETRIC_FLIP, THREE_CYCLE


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings, whatever the environment says."""
    for name in ("ERASURE_AUDIT_SEED", "ERASURE_AUDIT_OUTPUT_FORMAT", "ERASURE_AUDIT_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def flip_machine() -> EpsilonMachine:
    return SYMMETRIC_FLIP.build()


@pytest.fixture
def cycle_machine() -> EpsilonMachine:
    return THREE_CYCLE.build()


@pytest.fixture
def golden_machine() -> EpsilonMachine:
    return GOLDEN_MEAN.build()
