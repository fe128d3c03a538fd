"""Dyadic qubit measurement family exports."""

from erasure_audit.qubit.dyadic import (
    MAX_MACHINE_INDEX,
    MIN_MACHINE_INDEX,
    BasisChoice,
    DyadicAngle,
    born,
    build_dyadic_machine,
    collapse,
    dyadic_bases,
    dyadic_states,
    projector_probability,
)

__all__ = [
    "DyadicAngle",
    "BasisChoice",
    "born",
    "projector_probability",
    "collapse",
    "dyadic_states",
    "dyadic_bases",
    "build_dyadic_machine",
    "MIN_MACHINE_INDEX",
    "MAX_MACHINE_INDEX",
]
