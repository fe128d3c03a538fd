"""
Box protocols and the second-law audit.

Each protocol registers itself with :class:`ProtocolRegistry` and runs one
seeded trial at a time; :func:`run_audit` fans a master seed out over
trials.
"""

import logging
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from erasure_audit.config import get_settings
from erasure_audit.core.exceptions import NonTerminationError
from erasure_audit.core.registry import ProtocolRegistry
from erasure_audit.core.result import AuditReport, TrialReport
from erasure_audit.szilard.box import (
    BoxGeometry,
    BoxState,
    Partition,
    erase_records,
    insert_partition,
    landauer_slack,
    ontic_measurement,
    pt_measurement,
    rand_op,
    reset,
    reversed_reset,
)
from erasure_audit.szilard.ledger import AccountingPolicy, LedgerEntry, LedgerTotals
from erasure_audit.utils.seeding import derive_seed

logger = logging.getLogger(__name__)

# Net extraction below this many kT is rounding, not a violation
VIOLATION_TOLERANCE = 1e-12


@dataclass
class PerpetuumAudit:
    """
    Outcome of one measure-until-0 cycle.

    Attributes:
        seed: Seed of the box generator
        policy: Accounting policy in force
        iterations: Computational-basis measurements until outcome 0
        measurements: All measurements, phase ones included
        totals: Ledger column sums
        entries: The ledger
        returned_to_initial: Box back to its starting epistemic state
        landauer_slack_bits: Ledger budget minus entropy decrease
    """

    seed: int
    policy: AccountingPolicy
    iterations: int
    measurements: int
    totals: LedgerTotals
    entries: tuple[LedgerEntry, ...] = field(repr=False)
    returned_to_initial: bool
    landauer_slack_bits: float

    @property
    def net_work_extracted(self) -> float:
        return self.totals.net_work_extracted

    @property
    def violation_flag(self) -> bool:
        """Net work out of a single bath over a closed cycle."""
        return self.returned_to_initial and self.net_work_extracted > VIOLATION_TOLERANCE


def perpetuum_audit(
    seed: int,
    policy: AccountingPolicy | str,
    *,
    max_iterations: int | None = None,
) -> PerpetuumAudit:
    """
    Run the cycle: measure computational; stop on 0, else measure phase and
    repeat. Then extract kT ln 2 by a reversed reset and erase all records.

    The box starts with the computational partition in and the particle
    anywhere, and ends the same way. Under free measurement the ledger shows
    kT ln 2 extracted per cycle; honest accounting charges kT ln 2 per
    record and the net is never positive.

    Raises:
        NonTerminationError: If outcome 0 does not occur within the cap
    """
    policy = AccountingPolicy.parse(policy)
    cap = get_settings().box.max_loop_iterations if max_iterations is None else max_iterations

    state = BoxState.uniform(seed, inserted=(Partition.COMPUTATIONAL,))
    initial = state.epistemic.copy()
    entropy_before = state.entropy_bits

    iterations = 0
    measurements = 0
    while True:
        if iterations >= cap:
            raise NonTerminationError("perpetuum", cap)
        iterations += 1
        outcome, _ = pt_measurement(state, Partition.COMPUTATIONAL, policy)
        measurements += 1
        if outcome == 0:
            break
        pt_measurement(state, Partition.PHASE, policy)
        measurements += 1

    reversed_reset(state, policy)
    erase_records(state, policy)

    returned = bool(
        np.allclose(state.epistemic, initial, rtol=0.0, atol=1e-12)
        and state.inserted == {Partition.COMPUTATIONAL}
    )
    audit = PerpetuumAudit(
        seed=seed,
        policy=policy,
        iterations=iterations,
        measurements=measurements,
        totals=state.ledger.totals(),
        entries=state.ledger.entries,
        returned_to_initial=returned,
        landauer_slack_bits=landauer_slack(state, entropy_before, policy),
    )
    logger.debug(
        f"Perpetuum seed={seed} policy={policy.value}: {iterations} iteration(s), "
        f"net {audit.net_work_extracted:.6f} kT"
    )
    return audit


def _trial_report(
    name: str,
    trial: int,
    seed: int,
    policy: AccountingPolicy,
    state: BoxState,
    metrics: dict[str, Any],
    violation: bool = False,
) -> TrialReport:
    return TrialReport(
        protocol=name,
        trial=trial,
        seed=seed,
        policy=policy.value,
        metrics=metrics,
        totals=state.ledger.totals().to_dict(),
        entries=state.ledger.to_list(),
        violation_flag=violation,
    )


@ProtocolRegistry.register("repeatability")
class RepeatabilityProtocol:
    """Measure the same partition twice, in both measurement models."""

    name = "repeatability"
    description = "consecutive measurements of one partition agree"

    def run_trial(self, seed: int, policy: AccountingPolicy | str, trial: int = 0) -> TrialReport:
        policy = AccountingPolicy.parse(policy)
        state = BoxState.uniform(seed, inserted=(Partition.COMPUTATIONAL,))

        first, _ = pt_measurement(state, Partition.COMPUTATIONAL, policy)
        second, _ = pt_measurement(state, Partition.COMPUTATIONAL, policy)
        phase_first, _ = pt_measurement(state, Partition.PHASE, policy)
        phase_second, _ = pt_measurement(state, Partition.PHASE, policy)

        insert_partition(state, Partition.COMPUTATIONAL)
        ontic_first, _ = ontic_measurement(state, Partition.PHASE, policy)
        ontic_second, _ = ontic_measurement(state, Partition.PHASE, policy)
        erase_records(state, policy)

        metrics = {
            "first": first,
            "second": second,
            "agree": first == second,
            "phase_agree": phase_first == phase_second,
            "ontic_agree": ontic_first == ontic_second,
        }
        return _trial_report(self.name, trial, seed, policy, state, metrics)


@ProtocolRegistry.register("reset")
class ResetProtocol:
    """Piston reset, twice, starting with the side unknown."""

    name = "reset"
    description = "piston reset costs kT ln 2 and always ends on side 0"

    def run_trial(self, seed: int, policy: AccountingPolicy | str, trial: int = 0) -> TrialReport:
        policy = AccountingPolicy.parse(policy)
        state = BoxState.uniform(seed, inserted=(Partition.COMPUTATIONAL,))

        before = len(state.ledger)
        reset(state, policy)
        first_work = state.ledger.entries[before].work_on_system
        first_side = state.coordinates[0]
        reset(state, policy)
        second_work = state.ledger.entries[-1].work_on_system

        side_one = [
            c for c in range(4) if state.geometry.side(Partition.COMPUTATIONAL, c) == 1
        ]
        metrics = {
            "first_work_kT": first_work,
            "second_work_kT": second_work,
            "first_side": first_side,
            "final_side": state.coordinates[0],
            "side_zero_certain": bool(state.epistemic[side_one].sum() == 0.0),
        }
        return _trial_report(self.name, trial, seed, policy, state, metrics)


@ProtocolRegistry.register("rand")
class RandProtocol:
    """RAND from (0, 0)."""

    name = "rand"
    description = "RAND maps (0,0) onto (0,0), (1,0), (1,1)"

    def run_trial(self, seed: int, policy: AccountingPolicy | str, trial: int = 0) -> TrialReport:
        policy = AccountingPolicy.parse(policy)
        geometry = BoxGeometry.from_settings()
        state = BoxState.prepared(cell=geometry.cell_at(0, 0), seed=seed, geometry=geometry)

        rand_op(state)
        x, y = state.coordinates
        metrics = {"x": x, "y": y, "cell": state.ontic_cell, "entropy_bits": state.entropy_bits}
        return _trial_report(self.name, trial, seed, policy, state, metrics)


@ProtocolRegistry.register("perpetuum")
class PerpetuumProtocol:
    """The measure-until-0 cycle with reversed reset."""

    name = "perpetuum"
    description = "cyclic work extraction audit"

    def run_trial(self, seed: int, policy: AccountingPolicy | str, trial: int = 0) -> TrialReport:
        audit = perpetuum_audit(seed, policy)
        metrics = {
            "iterations": audit.iterations,
            "measurements": audit.measurements,
            "returned_to_initial": audit.returned_to_initial,
            "landauer_slack_bits": audit.landauer_slack_bits,
        }
        return TrialReport(
            protocol=self.name,
            trial=trial,
            seed=seed,
            policy=audit.policy.value,
            metrics=metrics,
            totals=audit.totals.to_dict(),
            entries=[asdict(e) for e in audit.entries],
            violation_flag=audit.violation_flag,
        )


def run_audit(
    protocol: str,
    policy: AccountingPolicy | str,
    seed: int,
    trials: int = 1,
) -> AuditReport:
    """
    Run ``trials`` independent trials of a registered protocol.

    Trial i uses ``derive_seed(seed, i)``, so any trial can be replayed on
    its own and the audit does not depend on execution order.
    """
    policy = AccountingPolicy.parse(policy)
    runner = ProtocolRegistry.get(protocol)
    audit = AuditReport(protocol=protocol, policy=policy.value, seed=seed)
    for i in range(trials):
        audit.add_trial(runner.run_trial(derive_seed(seed, i), policy, trial=i))
    logger.info(f"Audit finished: {audit!r}")
    return audit

