"""
Box protocol interface.

Protocols are matched structurally, so any class with a ``name`` and a
``run_trial`` method can be registered.
"""

from typing import Protocol, runtime_checkable

from erasure_audit.core.result import TrialReport


@runtime_checkable
class BoxProtocol(Protocol):
    """
    A seeded, self-contained experiment on the partitioned box.

    Implementations:
        - RepeatabilityProtocol: same partition measured twice
        - ResetProtocol: piston reset from an equilibrated two-region state
        - RandProtocol: RAND from (0, 0)
        - PerpetuumProtocol: the measure-until-0 cycle with reversed reset

    Example:
        >>> protocol = ProtocolRegistry.get("perpetuum")
        >>> report = protocol.run_trial(seed=0, policy=AccountingPolicy.PT_FREE_MEASUREMENT)
        >>> report.violation_flag
        True
    """

    @property
    def name(self) -> str:
        """Registry key."""
        ...

    @property
    def description(self) -> str:
        """One-line summary for listings."""
        ...

    def run_trial(self, seed: int, policy: str, trial: int = 0) -> TrialReport:
        """
        Run one trial.

        Args:
            seed: 64-bit seed for this trial
            policy: Accounting policy or its CLI spelling
            trial: Index recorded in the report

        Returns:
            TrialReport with metrics, ledger totals and entries
        """
        ...
