"""Core module exports."""

from erasure_audit.core.exceptions import (
    BoxStateError,
    ConfigurationError,
    ConvergenceError,
    DomainError,
    ErasureAuditError,
    MachineDefinitionError,
    NonTerminationError,
    StructuralError,
)
from erasure_audit.core.protocol import BoxProtocol
from erasure_audit.core.quantities import BitQuantity, HeatQuantity, ProbabilityVector
from erasure_audit.core.registry import ProtocolRegistry
from erasure_audit.core.result import (
    AuditReport,
    BoundReport,
    MachineReport,
    SimulationReport,
    TrialReport,
)

__all__ = [
    # Protocols
    "BoxProtocol",
    # Registry
    "ProtocolRegistry",
    # Quantities
    "BitQuantity",
    "HeatQuantity",
    "ProbabilityVector",
    # Results
    "AuditReport",
    "BoundReport",
    "MachineReport",
    "SimulationReport",
    "TrialReport",
    # Exceptions
    "ErasureAuditError",
    "DomainError",
    "MachineDefinitionError",
    "StructuralError",
    "ConvergenceError",
    "BoxStateError",
    "NonTerminationError",
    "ConfigurationError",
]
