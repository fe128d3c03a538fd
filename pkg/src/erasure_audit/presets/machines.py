"""
Named example machines.

Small machines with hand-checkable stationary values, for the CLI and for
exercising the analysis on chains other than the dyadic family.
"""

import math
from collections.abc import Callable
from dataclasses import dataclass

from erasure_audit.core.exceptions import DomainError
from erasure_audit.mechanics.machine import EpsilonMachine
from erasure_audit.qubit.dyadic import build_dyadic_machine


@dataclass(frozen=True)
class MachinePreset:
    """
    Machine preset.

    Attributes:
        name: Preset identifier
        description: One-line summary
        build: Factory returning a fresh machine
        complexity_bits: Expected statistical complexity (None if reducible)
        erased_bits: Expected erased information per step (None if reducible)
        irreducible: Whether the state chain has a single closed class
    """

    name: str
    description: str
    build: Callable[[], EpsilonMachine]
    complexity_bits: float | None
    erased_bits: float | None
    irreducible: bool = True


def _single_state() -> EpsilonMachine:
    return EpsilonMachine(["s"], ["c"], [0], [("s", "c", 0, "s", 1.0)])


def _symmetric_flip() -> EpsilonMachine:
    return EpsilonMachine(
        ["a", "b"],
        ["c"],
        [0, 1],
        [
            ("a", "c", 0, "a", 0.5),
            ("a", "c", 1, "b", 0.5),
            ("b", "c", 0, "b", 0.5),
            ("b", "c", 1, "a", 0.5),
        ],
    )


def _three_cycle() -> EpsilonMachine:
    return EpsilonMachine(
        ["a", "b", "c"],
        ["tick"],
        [0],
        [
            ("a", "tick", 0, "b", 1.0),
            ("b", "tick", 0, "c", 1.0),
            ("c", "tick", 0, "a", 1.0),
        ],
    )


def _identity_pair() -> EpsilonMachine:
    return EpsilonMachine(
        ["a", "b"],
        ["c"],
        [0],
        [("a", "c", 0, "a", 1.0), ("b", "c", 0, "b", 1.0)],
    )


def _golden_mean() -> EpsilonMachine:
    # No two consecutive 1s
    return EpsilonMachine(
        ["A", "B"],
        ["c"],
        [0, 1],
        [
            ("A", "c", 0, "A", 0.5),
            ("A", "c", 1, "B", 0.5),
            ("B", "c", 0, "A", 1.0),
        ],
    )


# === Machine Presets ===

SINGLE_STATE = MachinePreset(
    name="single-state",
    description="one state, no memory",
    build=_single_state,
    complexity_bits=0.0,
    erased_bits=0.0,
)

SYMMETRIC_FLIP = MachinePreset(
    name="symmetric-flip",
    description="two states, fair coin decides whether to switch",
    build=_symmetric_flip,
    complexity_bits=1.0,
    erased_bits=1.0,
)

THREE_CYCLE = MachinePreset(
    name="three-cycle",
    description="deterministic period-3 rotation",
    build=_three_cycle,
    complexity_bits=math.log2(3),
    erased_bits=0.0,
)

IDENTITY_PAIR = MachinePreset(
    name="identity-pair",
    description="two absorbing states (reducible)",
    build=_identity_pair,
    complexity_bits=None,
    erased_bits=None,
    irreducible=False,
)

GOLDEN_MEAN = MachinePreset(
    name="golden-mean",
    description="golden mean process, no two consecutive 1s",
    build=_golden_mean,
    complexity_bits=-(2 / 3) * math.log2(2 / 3) - (1 / 3) * math.log2(1 / 3),
    erased_bits=2 / 3,
)

DYADIC_QUBIT = MachinePreset(
    name="dyadic-qubit-1",
    description="qubit states and bases at multiples of pi/4",
    build=lambda: build_dyadic_machine(1),
    complexity_bits=2.0,
    erased_bits=1.5,
)


# Registry of all presets
MACHINE_PRESETS: dict[str, MachinePreset] = {
    preset.name: preset
    for preset in [
        SINGLE_STATE,
        SYMMETRIC_FLIP,
        THREE_CYCLE,
        IDENTITY_PAIR,
        GOLDEN_MEAN,
        DYADIC_QUBIT,
    ]
}


def get_preset(name: str) -> MachinePreset:
    """
    Get a machine preset by name.

    Raises:
        DomainError: If preset not found
    """
    if name not in MACHINE_PRESETS:
        raise DomainError("preset", name, f"one of {list(MACHINE_PRESETS)}")
    return MACHINE_PRESETS[name]


def list_presets() -> list[str]:
    """List all available machine preset names."""
    return list(MACHINE_PRESETS)
