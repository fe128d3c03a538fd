"""
Thermodynamic ledger for the partitioned box.

Work and heat are in units of kT; record sizes are in bits. Signs are fixed
so totals stay additive: work_on_system >= 0 for compression and erasure,
work_extracted >= 0 for expansion, heat_dissipated >= 0 always.
"""

import math
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Any

from erasure_audit.bounds.erasure import kt_to_bits
from erasure_audit.core.exceptions import DomainError


class AccountingPolicy(str, Enum):
    """How measurement records are charged."""

    # Erasing a record bit costs kT ln 2 of work, dissipated as heat
    LANDAUER_HONEST = "landauer_honest"
    # Records are free: the assumption under audit
    PT_FREE_MEASUREMENT = "pt_free_measurement"

    @classmethod
    def parse(cls, value: "str | AccountingPolicy") -> "AccountingPolicy":
        """Accept enum values and the CLI spellings ``honest`` / ``pt-free``."""
        if isinstance(value, cls):
            return value
        aliases = {"honest": cls.LANDAUER_HONEST, "pt-free": cls.PT_FREE_MEASUREMENT}
        key = str(value).strip().lower()
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError as e:
            valid = ", ".join([*aliases, *(p.value for p in cls)])
            raise DomainError("policy", value, f"one of {valid}") from e

    @property
    def charges_records(self) -> bool:
        return self is AccountingPolicy.LANDAUER_HONEST


@dataclass(frozen=True)
class LedgerEntry:
    """One operation's thermodynamic footprint."""

    operation: str
    work_on_system: float = 0.0
    work_extracted: float = 0.0
    heat_dissipated: float = 0.0
    record_bits_created: float = 0.0
    record_bits_erased: float = 0.0

    def __post_init__(self) -> None:
        for name in (
            "work_on_system",
            "work_extracted",
            "heat_dissipated",
            "record_bits_created",
            "record_bits_erased",
        ):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise DomainError(name, value, "finite and >= 0")


@dataclass(frozen=True)
class LedgerTotals:
    """Column sums of a ledger."""

    work_on_system: float
    work_extracted: float
    heat_dissipated: float
    record_bits_created: float
    record_bits_erased: float

    @property
    def net_work_extracted(self) -> float:
        return self.work_extracted - self.work_on_system

    @property
    def outstanding_record_bits(self) -> float:
        return self.record_bits_created - self.record_bits_erased

    def to_dict(self) -> dict[str, float]:
        return {
            **asdict(self),
            "net_work_extracted": self.net_work_extracted,
            "outstanding_record_bits": self.outstanding_record_bits,
        }


class ThermoLedger:
    """
    Append-only record of work, heat and record bits.

    Example:
        >>> ledger = ThermoLedger()
        >>> _ = ledger.record("reset", work_on_system=0.5, heat_dissipated=0.5)
        >>> ledger.totals().work_on_system
        0.5
    """

    def __init__(self) -> None:
        self._entries: list[LedgerEntry] = []

    def append(self, entry: LedgerEntry) -> LedgerEntry:
        self._entries.append(entry)
        return entry

    def record(self, operation: str, **amounts: float) -> LedgerEntry:
        """Append an entry built from keyword amounts."""
        return self.append(LedgerEntry(operation, **amounts))

    @property
    def entries(self) -> tuple[LedgerEntry, ...]:
        return tuple(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def totals(self) -> LedgerTotals:
        def column(name: str) -> float:
            return math.fsum(getattr(e, name) for e in self._entries)

        return LedgerTotals(
            work_on_system=column("work_on_system"),
            work_extracted=column("work_extracted"),
            heat_dissipated=column("heat_dissipated"),
            record_bits_created=column("record_bits_created"),
            record_bits_erased=column("record_bits_erased"),
        )

    def landauer_budget_bits(self, policy: AccountingPolicy) -> float:
        """
        Entropy decrease (bits) the ledger pays for.

        (work_on_system - work_extracted) / ln 2, plus one bit per outstanding
        record when records are charged.
        """
        totals = self.totals()
        liability = totals.outstanding_record_bits if policy.charges_records else 0.0
        return kt_to_bits(-totals.net_work_extracted) + liability

    def to_list(self) -> list[dict[str, Any]]:
        return [asdict(e) for e in self._entries]
