"""Presets module exports."""

from erasure_audit.presets.machines import (
    DYADIC_QUBIT,
    GOLDEN_MEAN,
    IDENTITY_PAIR,
    MACHINE_PRESETS,
    SINGLE_STATE,
    SYMMETRIC_FLIP,
    THREE_CYCLE,
    MachinePreset,
    get_preset,
    list_presets,
)

__all__ = [
    "MachinePreset",
    "MACHINE_PRESETS",
    "get_preset",
    "list_presets",
    # Named presets
    "SINGLE_STATE",
    "SYMMETRIC_FLIP",
    "THREE_CYCLE",
    "IDENTITY_PAIR",
    "GOLDEN_MEAN",
    "DYADIC_QUBIT",
]
