"""Partitioned-box model: box state, ledger, protocols."""

from erasure_audit.szilard.box import (
    BoxGeometry,
    BoxState,
    InsertionSpeed,
    Partition,
    equilibrate,
    erase_records,
    insert_partition,
    landauer_slack,
    ontic_measurement,
    pt_measurement,
    rand_op,
    read_side,
    remove_partition,
    reset,
    reversed_reset,
    sequential_rand_distribution,
)
from erasure_audit.szilard.ledger import (
    AccountingPolicy,
    LedgerEntry,
    LedgerTotals,
    ThermoLedger,
)
from erasure_audit.szilard.protocols import (
    PerpetuumAudit,
    PerpetuumProtocol,
    RandProtocol,
    RepeatabilityProtocol,
    ResetProtocol,
    perpetuum_audit,
    run_audit,
)

__all__ = [
    # Box
    "BoxGeometry",
    "BoxState",
    "InsertionSpeed",
    "Partition",
    "equilibrate",
    "erase_records",
    "insert_partition",
    "landauer_slack",
    "ontic_measurement",
    "pt_measurement",
    "rand_op",
    "read_side",
    "remove_partition",
    "reset",
    "reversed_reset",
    "sequential_rand_distribution",
    # Ledger
    "AccountingPolicy",
    "LedgerEntry",
    "LedgerTotals",
    "ThermoLedger",
    # Protocols
    "PerpetuumAudit",
    "PerpetuumProtocol",
    "RandProtocol",
    "RepeatabilityProtocol",
    "ResetProtocol",
    "perpetuum_audit",
    "run_audit",
]
