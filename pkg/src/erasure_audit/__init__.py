"""
Erasure Audit Package

Exact erased-information bounds for finite-memory models of sequential qubit
measurement, the epsilon-machine analysis behind them, and a ledgered
partitioned-box model for auditing measurement and reset costs.
"""

__version__ = "0.1.0"

from erasure_audit.bounds import erased_information, landauer_heat, qubit_landauer_ceiling
from erasure_audit.core import ErasureAuditError, ProbabilityVector, ProtocolRegistry
from erasure_audit.mechanics import EpsilonMachine, mean_erased_information, statistical_complexity
from erasure_audit.qubit import build_dyadic_machine
from erasure_audit.szilard import AccountingPolicy, perpetuum_audit

__all__ = [
    "AccountingPolicy",
    "EpsilonMachine",
    "ErasureAuditError",
    "ProbabilityVector",
    "ProtocolRegistry",
    "build_dyadic_machine",
    "erased_information",
    "landauer_heat",
    "mean_erased_information",
    "perpetuum_audit",
    "qubit_landauer_ceiling",
    "statistical_complexity",
    "__version__",
]
