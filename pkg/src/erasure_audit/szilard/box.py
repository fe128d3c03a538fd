"""
The four-cell partitioned box.

A single particle sits in one of four cells. Two partitions can be inserted:
the computational one splits the cells into sides x = 0 / 1, the phase one
into sides y = 0 / 1; with both in place every cell is isolated and the
cell is the pair (x, y). Positions inside a cell never affect an outcome or
a ledger entry, so cells are the whole phase space of the model.

Partition moves and equilibration are free. Work enters only through
isothermal volume changes (kT ln of the volume ratio) and, under the honest
policy, through erasure of measurement records (kT ln 2 per bit).
"""

import logging
from collections.abc import Iterable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from numpy.typing import NDArray

from erasure_audit.bounds.erasure import LN2, bits_to_kt
from erasure_audit.config import BoxSettings, get_settings
from erasure_audit.core.exceptions import BoxStateError
from erasure_audit.core.quantities import ProbabilityVector
from erasure_audit.szilard.ledger import AccountingPolicy, ThermoLedger
from erasure_audit.utils.entropy import shannon_entropy
from erasure_audit.utils.seeding import make_rng

logger = logging.getLogger(__name__)

CELLS = (0, 1, 2, 3)


class Partition(str, Enum):
    """The two ways of splitting the box."""

    COMPUTATIONAL = "computational"
    PHASE = "phase"

    @property
    def other(self) -> "Partition":
        return Partition.PHASE if self is Partition.COMPUTATIONAL else Partition.COMPUTATIONAL


class InsertionSpeed(str, Enum):
    """Insert before the particle moves, or after it has spread."""

    RAPID = "rapid"
    AFTER_EQUILIBRATION = "after_equilibration"


@dataclass(frozen=True)
class BoxGeometry:
    """Which cells lie on which side of each partition."""

    computational_groups: tuple[tuple[int, int], tuple[int, int]] = ((0, 1), (2, 3))
    phase_groups: tuple[tuple[int, int], tuple[int, int]] = ((0, 2), (1, 3))

    @classmethod
    def from_settings(cls, settings: BoxSettings | None = None) -> "BoxGeometry":
        settings = settings or get_settings().box
        return cls(settings.computational_groups, settings.phase_groups)

    def groups(self, partition: Partition) -> tuple[tuple[int, int], tuple[int, int]]:
        if partition is Partition.COMPUTATIONAL:
            return self.computational_groups
        return self.phase_groups

    def side(self, partition: Partition, cell: int) -> int:
        return 0 if cell in self.groups(partition)[0] else 1

    def cell_at(self, x: int, y: int) -> int:
        """The cell on computational side x and phase side y."""
        (cell,) = set(self.computational_groups[x]) & set(self.phase_groups[y])
        return cell

    def coordinates(self, cell: int) -> tuple[int, int]:
        return self.side(Partition.COMPUTATIONAL, cell), self.side(Partition.PHASE, cell)

    def region(self, cell: int, inserted: Iterable[Partition]) -> tuple[int, ...]:
        """Cells reachable from ``cell`` without crossing an inserted partition."""
        walls = tuple(inserted)
        return tuple(
            c for c in CELLS if all(self.side(p, c) == self.side(p, cell) for p in walls)
        )

    def regions(self, inserted: Iterable[Partition]) -> list[tuple[int, ...]]:
        walls = tuple(inserted)
        return sorted({self.region(c, walls) for c in CELLS})


@dataclass(eq=False)
class BoxState:
    """
    Ontic cell, epistemic distribution, inserted partitions and the ledger.

    A box state is owned by one protocol at a time; operations mutate it in
    place and return it. All randomness comes from ``rng``.

    Between an operation that moves a partition and the next
    :func:`equilibrate`, ``epistemic`` keeps what was known before the move
    and need not be flat on the new regions (:meth:`is_region_uniform` says
    whether it is). Both measurement procedures leave it flat again.

    Example:
        >>> box = BoxState.prepared(cell=0, seed=0)
        >>> sorted(p.value for p in box.inserted)
        ['computational', 'phase']
    """

    ontic_cell: int
    epistemic: NDArray[np.float64]
    inserted: set[Partition]
    rng: np.random.Generator = field(repr=False)
    geometry: BoxGeometry = field(default_factory=BoxGeometry)
    ledger: ThermoLedger = field(default_factory=ThermoLedger, repr=False)

    def __post_init__(self) -> None:
        self.epistemic = np.asarray(self.epistemic, dtype=np.float64)
        if self.ontic_cell not in CELLS:
            raise BoxStateError(f"Ontic cell must be one of {CELLS}, got {self.ontic_cell}")
        if self.epistemic[self.ontic_cell] <= 0:
            raise BoxStateError("Ontic cell must carry epistemic mass")

    # === Constructors ===

    @classmethod
    def prepared(
        cls,
        cell: int,
        seed: int,
        inserted: Iterable[Partition] = (Partition.COMPUTATIONAL, Partition.PHASE),
        geometry: BoxGeometry | None = None,
    ) -> "BoxState":
        """Particle known to be in ``cell``."""
        epistemic = np.zeros(len(CELLS))
        epistemic[cell] = 1.0
        return cls(
            ontic_cell=cell,
            epistemic=epistemic,
            inserted=set(inserted),
            rng=make_rng(seed),
            geometry=geometry or BoxGeometry.from_settings(),
        )

    @classmethod
    def uniform(
        cls,
        seed: int,
        inserted: Iterable[Partition] = (Partition.COMPUTATIONAL,),
        geometry: BoxGeometry | None = None,
    ) -> "BoxState":
        """Side unknown: uniform over all four cells, ontic cell drawn uniformly."""
        rng = make_rng(seed)
        return cls(
            ontic_cell=int(rng.integers(len(CELLS))),
            epistemic=np.full(len(CELLS), 1.0 / len(CELLS)),
            inserted=set(inserted),
            rng=rng,
            geometry=geometry or BoxGeometry.from_settings(),
        )

    # === Views ===

    @property
    def coordinates(self) -> tuple[int, int]:
        """(x, y) of the ontic cell."""
        return self.geometry.coordinates(self.ontic_cell)

    @property
    def region(self) -> tuple[int, ...]:
        """Cells accessible to the particle."""
        return self.geometry.region(self.ontic_cell, self.inserted)

    @property
    def epistemic_vector(self) -> ProbabilityVector:
        return ProbabilityVector(CELLS, self.epistemic)

    @property
    def entropy_bits(self) -> float:
        return shannon_entropy(self.epistemic)

    def is_region_uniform(self, tolerance: float = 1e-12) -> bool:
        """Whether the epistemic state is flat on every region."""
        for region in self.geometry.regions(self.inserted):
            values = self.epistemic[list(region)]
            if values.max() - values.min() > tolerance:
                return False
        return True


def _require_inserted(state: BoxState, which: Partition) -> None:
    if which not in state.inserted:
        raise BoxStateError(f"{which.value} partition is not inserted")


def remove_partition(state: BoxState, which: Partition) -> BoxState:
    """
    (A) Remove a partition. The epistemic state is untouched until
    :func:`equilibrate`.

    Raises:
        BoxStateError: If the partition is not inserted
    """
    _require_inserted(state, which)
    state.inserted.discard(which)
    logger.debug(f"Removed {which.value} partition")
    return state


def equilibrate(state: BoxState) -> BoxState:
    """
    (D) Let the particle spread over its accessible region.

    The ontic cell is redrawn uniformly within the region and the epistemic
    state becomes uniform on it.
    """
    region = state.region
    state.ontic_cell = int(region[state.rng.integers(len(region))])
    epistemic = np.zeros(len(CELLS))
    epistemic[list(region)] = 1.0 / len(region)
    state.epistemic = epistemic
    return state


def insert_partition(
    state: BoxState,
    which: Partition,
    speed: InsertionSpeed = InsertionSpeed.RAPID,
) -> BoxState:
    """
    (B) Insert a partition.

    Rapid insertion traps the particle on its current side; the epistemic
    weights stay as they are, now split between the new regions, so each
    region carries exactly the mass it held before insertion. Within a
    region the weights stay as they were until :func:`equilibrate`, e.g.
    (1/2, 0, 1/2, 0) under the computational partition. Insertion after
    equilibration first spreads the particle, so each side gets mass in
    proportion to its volume.

    Raises:
        BoxStateError: If the partition is already inserted
    """
    if which in state.inserted:
        raise BoxStateError(f"{which.value} partition is already inserted")
    if speed is InsertionSpeed.AFTER_EQUILIBRATION:
        equilibrate(state)
    state.inserted.add(which)
    logger.debug(f"Inserted {which.value} partition ({speed.value})")
    return state


def read_side(state: BoxState, which: Partition, policy: AccountingPolicy) -> int:
    """
    (C) Find out on which side of ``which`` the particle is.

    The epistemic state is conditioned on the answer and the answer is kept
    as a one-bit record. Whether erasing that record costs kT ln 2 is
    decided by ``policy`` at erasure time.

    Raises:
        BoxStateError: If the partition is not inserted
    """
    _require_inserted(state, which)
    outcome = state.geometry.side(which, state.ontic_cell)

    same_side = np.array([state.geometry.side(which, c) == outcome for c in CELLS])
    conditioned = np.where(same_side, state.epistemic, 0.0)
    state.epistemic = conditioned / conditioned.sum()

    state.ledger.record(f"read_side:{which.value}:{policy.value}", record_bits_created=1.0)
    return outcome


def pt_measurement(
    state: BoxState,
    which: Partition,
    policy: AccountingPolicy,
) -> tuple[int, BoxState]:
    """
    Measurement with a single partition in place: remove the existing
    partition, rapidly insert ``which``, read the side, equilibrate.

    Measuring the same partition twice in a row repeats the outcome, since
    rapid reinsertion keeps the particle on its side.

    Raises:
        BoxStateError: Unless exactly one partition is inserted
    """
    if len(state.inserted) != 1:
        raise BoxStateError(
            f"Single-partition measurement needs exactly one partition, have {len(state.inserted)}"
        )
    (existing,) = state.inserted
    remove_partition(state, existing)
    insert_partition(state, which, InsertionSpeed.RAPID)
    outcome = read_side(state, which, policy)
    equilibrate(state)
    return outcome, state


def ontic_measurement(
    state: BoxState,
    which_to_remove: Partition,
    policy: AccountingPolicy,
) -> tuple[int, BoxState]:
    """
    Measurement with both partitions kept between measurements: remove one,
    read the side of the other, equilibrate, re-insert.

    With cells as phase space this model has well-defined ontic states. Its
    faithful version tracks a continuous position and so fails the
    limited-memory assumption; that version is not simulated.

    Raises:
        BoxStateError: Unless both partitions are inserted
    """
    if state.inserted != {Partition.COMPUTATIONAL, Partition.PHASE}:
        raise BoxStateError("Two-partition measurement needs both partitions inserted")
    remaining = which_to_remove.other
    remove_partition(state, which_to_remove)
    outcome = read_side(state, remaining, policy)
    equilibrate(state)
    insert_partition(state, which_to_remove, InsertionSpeed.RAPID)
    return outcome, state


def reset(state: BoxState, policy: AccountingPolicy) -> BoxState:
    """
    Piston reset to computational side 0.

    (a) remove the computational partition, (b) compress each region along x
    to half its size, (c) re-insert the partition and return the pistons.
    Compression of the one-particle gas costs kT ln 2 of work, all of it
    dissipated as heat, whatever was known about the side beforehand.
    """
    geometry = state.geometry
    if Partition.COMPUTATIONAL in state.inserted:
        remove_partition(state, Partition.COMPUTATIONAL)

    _, y = state.coordinates
    state.ontic_cell = geometry.cell_at(0, y)
    compressed = np.zeros(len(CELLS))
    for cell, mass in zip(CELLS, state.epistemic, strict=True):
        compressed[geometry.cell_at(0, geometry.coordinates(cell)[1])] += mass
    state.epistemic = compressed

    state.ledger.record(f"reset:{policy.value}", work_on_system=LN2, heat_dissipated=LN2)
    insert_partition(state, Partition.COMPUTATIONAL, InsertionSpeed.RAPID)
    logger.debug("Reset to computational side 0")
    return state


def reversed_reset(state: BoxState, policy: AccountingPolicy) -> BoxState:
    """
    Reset run backwards: let the particle, known to be on side 0, push the
    pistons out to the full box, extracting kT ln 2 of work from the bath.
    Ends with the computational partition inserted and the side unknown.

    Raises:
        BoxStateError: If the computational partition is absent or side 0 is
            not known with certainty
    """
    _require_inserted(state, Partition.COMPUTATIONAL)
    geometry = state.geometry
    side_one = [c for c in CELLS if geometry.side(Partition.COMPUTATIONAL, c) == 1]
    if state.epistemic[side_one].sum() > 0:
        raise BoxStateError("Reversed reset needs the particle known to be on side 0")

    remove_partition(state, Partition.COMPUTATIONAL)
    state.ledger.record(f"reversed_reset:{policy.value}", work_extracted=LN2)
    insert_partition(state, Partition.COMPUTATIONAL, InsertionSpeed.AFTER_EQUILIBRATION)
    return state


def erase_records(state: BoxState, policy: AccountingPolicy) -> BoxState:
    """
    Erase every outstanding record bit.

    Honest accounting charges kT ln 2 of work per bit, dissipated as heat;
    under free measurement the erasure costs nothing.
    """
    bits = state.ledger.totals().outstanding_record_bits
    if bits <= 0:
        return state
    cost = bits_to_kt(bits) if policy.charges_records else 0.0
    state.ledger.record(
        f"erase_records:{policy.value}",
        work_on_system=cost,
        heat_dissipated=cost,
        record_bits_erased=bits,
    )
    logger.debug(f"Erased {bits:g} record bit(s) at {cost:.6f} kT")
    return state


def sequential_rand_distribution(geometry: BoxGeometry | None = None) -> dict[tuple[int, int], float]:
    """
    RAND output probabilities from sequential coordinate equilibration.

    Starting at (0, 0) with both partitions in: remove the computational
    partition, equilibrate, re-insert; if the particle came out on x = 1,
    do the same with the phase partition. Each equilibration splits the mass
    over the region in proportion to volume.

    Returns:
        {(0, 0): 1/2, (1, 0): 1/4, (1, 1): 1/4} for the default geometry
    """
    geometry = geometry or BoxGeometry.from_settings()
    start = geometry.cell_at(0, 0)
    distribution: dict[tuple[int, int], float] = {}

    x_region = geometry.region(start, [Partition.PHASE])
    for cell in x_region:
        weight = 1.0 / len(x_region)
        x, y = geometry.coordinates(cell)
        if x == 0:
            distribution[(x, y)] = distribution.get((x, y), 0.0) + weight
            continue
        y_region = geometry.region(cell, [Partition.COMPUTATIONAL])
        for inner in y_region:
            key = geometry.coordinates(inner)
            distribution[key] = distribution.get(key, 0.0) + weight / len(y_region)
    return distribution


def rand_op(
    state: BoxState,
    seed: int | None = None,
    probabilities: tuple[float, float, float] | None = None,
) -> BoxState:
    """
    RAND: randomize the register from (0, 0) onto (0, 0), (1, 0) or (1, 1).

    Probabilities default to the configured ones, (1/2, 1/4, 1/4). RAND is
    logically irreversible but does not reset deterministically; following
    the claim under audit it books no heat.

    Raises:
        BoxStateError: Unless the box is at (0, 0) with both partitions in
    """
    geometry = state.geometry
    if state.inserted != {Partition.COMPUTATIONAL, Partition.PHASE}:
        raise BoxStateError("RAND needs both partitions inserted")
    if state.coordinates != (0, 0):
        raise BoxStateError(f"RAND starts from (0, 0), box is at {state.coordinates}")

    weights = np.asarray(probabilities or get_settings().box.rand_probabilities)
    support = [geometry.cell_at(0, 0), geometry.cell_at(1, 0), geometry.cell_at(1, 1)]
    rng = make_rng(seed) if seed is not None else state.rng
    state.ontic_cell = int(support[rng.choice(len(support), p=weights)])

    epistemic = np.zeros(len(CELLS))
    epistemic[support] = weights
    state.epistemic = epistemic
    state.ledger.record("rand")
    return state


def landauer_slack(
    state: BoxState,
    entropy_before: float,
    policy: AccountingPolicy,
) -> float:
    """
    Ledger-level Landauer check, in bits.

    Returns budget - decrease, where decrease is the drop of the epistemic
    entropy since ``entropy_before`` and the budget is
    :meth:`ThermoLedger.landauer_budget_bits`. Honest ledgers never go
    negative.
    """
    decrease = entropy_before - state.entropy_bits
    return state.ledger.landauer_budget_bits(policy) - decrease
