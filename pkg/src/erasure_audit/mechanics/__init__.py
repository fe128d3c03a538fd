"""Epsilon-machine engine exports."""

from erasure_audit.mechanics.analysis import (
    is_irreducible,
    mean_erased_information,
    reverse_kernel,
    stationarity_residual,
    stationary,
    statistical_complexity,
    transition_matrix,
)
from erasure_audit.mechanics.definition import (
    MachineDefinition,
    dump_machine,
    load_machine,
    parse_machine,
)
from erasure_audit.mechanics.machine import EpsilonMachine, Transition
from erasure_audit.mechanics.sampling import (
    MIN_EMPIRICAL_LENGTH,
    EmpiricalErasure,
    StateFrequencies,
    TrajectoryRecord,
    empirical_erasure,
    sample_trajectory,
    state_frequencies,
)

__all__ = [
    # Machine
    "EpsilonMachine",
    "Transition",
    # Analysis
    "transition_matrix",
    "is_irreducible",
    "stationary",
    "stationarity_residual",
    "statistical_complexity",
    "reverse_kernel",
    "mean_erased_information",
    # Sampling
    "TrajectoryRecord",
    "EmpiricalErasure",
    "StateFrequencies",
    "MIN_EMPIRICAL_LENGTH",
    "sample_trajectory",
    "empirical_erasure",
    "state_frequencies",
    # Files
    "MachineDefinition",
    "parse_machine",
    "load_machine",
    "dump_machine",
]
