"""
Trajectory sampling and Monte Carlo estimators.

Every step draws a measurement choice i.i.d. from the choice distribution,
then an (outcome, next state) pair from the kernel row. Each step emits its
outcome: a model of sequential measurement has to output something.
"""

import logging
import math
from bisect import bisect_right
from itertools import accumulate
from collections.abc import Hashable, Iterator
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from erasure_audit.config import get_settings
from erasure_audit.core.exceptions import DomainError, MachineDefinitionError
from erasure_audit.core.quantities import BitQuantity
from erasure_audit.mechanics.machine import EpsilonMachine
from erasure_audit.utils.seeding import MASK64, derive_seed, make_rng

logger = logging.getLogger(__name__)

MIN_EMPIRICAL_LENGTH = 10_000

# Stream index for bootstrap resampling under the record's seed
BOOTSTRAP_STREAM = 1


@dataclass(frozen=True, eq=False)
class TrajectoryRecord:
    """
    A sampled run of a machine.

    Arrays hold indices into the machine's ``choices``, ``outcomes`` and
    ``states``; ``states[t]`` is the state after step t.
    """

    start: int
    seed: int
    choices: NDArray[np.int64] = field(repr=False)
    outcomes: NDArray[np.int64] = field(repr=False)
    states: NDArray[np.int64] = field(repr=False)

    def __len__(self) -> int:
        return int(self.states.size)

    @property
    def previous_states(self) -> NDArray[np.int64]:
        """State before each step."""
        return np.concatenate(([self.start], self.states[:-1])).astype(np.int64)

    def steps(self, machine: EpsilonMachine) -> Iterator[tuple[Hashable, Hashable, Hashable]]:
        """(choice id, outcome label, post-measurement state id) per step."""
        for c, o, s in zip(self.choices, self.outcomes, self.states, strict=True):
            yield machine.choices[c], machine.outcomes[o], machine.states[s]


@dataclass(frozen=True)
class EmpiricalErasure:
    """
    Plug-in erased-information estimate with bootstrap error.

    Attributes:
        estimate: sum_j pi_hat_j H(S_{t-1} | S_t=s_j) from transition counts
        standard_error: Bootstrap standard error (block length 1)
        excluded_states: States never visited, left out of the average
        transitions: Number of transitions counted
    """

    estimate: BitQuantity
    standard_error: float
    excluded_states: int
    transitions: int


@dataclass(frozen=True, eq=False)
class StateFrequencies:
    """Visit frequencies with batch-means standard errors."""

    frequencies: NDArray[np.float64]
    standard_errors: NDArray[np.float64]
    batches: int


def sample_trajectory(
    machine: EpsilonMachine,
    start: Hashable,
    length: int,
    seed: int,
) -> TrajectoryRecord:
    """
    Sample ``length`` steps from ``start``.

    The result depends only on (machine, start, length, seed).

    Raises:
        DomainError: If length < 1
        MachineDefinitionError: If start is not a state of the machine
    """
    if length < 1:
        raise DomainError("length", length, ">= 1")
    state = machine.state_index(start)
    seed &= MASK64

    rng = make_rng(seed)
    choice_draws = rng.choice(
        machine.n_choices, size=length, p=machine.choice_distribution.entries
    ).tolist()
    uniforms = rng.random(length).tolist()

    _, _, outcome_of, dst_of, probability = machine.edges
    row_start = machine.row_start
    # Row-local cumulative probabilities, built for visited rows only
    row_cache: dict[int, tuple[list[float], list[int], list[int]]] = {}

    n_choices = machine.n_choices
    states = [0] * length
    outcomes = [0] * length
    for t in range(length):
        r = state * n_choices + choice_draws[t]
        cached = row_cache.get(r)
        if cached is None:
            lo, hi = int(row_start[r]), int(row_start[r + 1])
            cached = (
                list(accumulate(probability[lo:hi].tolist())),
                dst_of[lo:hi].tolist(),
                outcome_of[lo:hi].tolist(),
            )
            row_cache[r] = cached
        cumulative, dsts, outs = cached
        e = min(bisect_right(cumulative, uniforms[t]), len(cumulative) - 1)
        state = dsts[e]
        states[t] = state
        outcomes[t] = outs[e]

    logger.debug(f"Sampled {length} steps of {machine!r} with seed {seed}")
    return TrajectoryRecord(
        start=machine.state_index(start),
        seed=seed,
        choices=np.asarray(choice_draws, dtype=np.int64),
        outcomes=np.asarray(outcomes, dtype=np.int64),
        states=np.asarray(states, dtype=np.int64),
    )


def _transition_counts(record: TrajectoryRecord, n_states: int) -> NDArray[np.int64]:
    pairs = record.previous_states * n_states + record.states
    return np.bincount(pairs, minlength=n_states * n_states).reshape(n_states, n_states)


def _conditional_entropy(counts: NDArray[np.int64] | NDArray[np.float64]) -> float:
    """H(prev | next) in bits from a count table (rows prev, columns next)."""
    total = counts.sum()
    inflow = counts.sum(axis=0)
    mask = counts > 0
    ratio = np.divide(counts, inflow[None, :], out=np.ones(counts.shape), where=mask)
    terms = np.where(mask, counts * np.log2(ratio, out=np.zeros(counts.shape), where=mask), 0.0)
    return max(0.0, -math.fsum(terms.ravel().tolist()) / float(total))


def empirical_erasure(
    record: TrajectoryRecord,
    machine: EpsilonMachine,
    *,
    resamples: int | None = None,
) -> EmpiricalErasure:
    """
    Estimate the erased information per step from a trajectory.

    Transition pairs (S_{t-1}, S_t) are treated as independent draws for the
    bootstrap (block length 1), which ignores the serial correlation of the
    chain.

    Raises:
        DomainError: If the record is shorter than 10^4 steps
        MachineDefinitionError: If the record visits states the machine lacks
    """
    if len(record) < MIN_EMPIRICAL_LENGTH:
        raise DomainError("record length", len(record), f">= {MIN_EMPIRICAL_LENGTH}")
    n = machine.n_states
    if record.states.max() >= n or record.start >= n:
        raise MachineDefinitionError("Record references states outside the machine")

    counts = _transition_counts(record, n)
    visits = counts.sum(axis=0)
    excluded = int(np.count_nonzero(visits == 0))
    if excluded:
        logger.warning(f"{excluded} state(s) never visited; excluded from the estimate")

    estimate = _conditional_entropy(counts)

    resamples = get_settings().machine.bootstrap_resamples if resamples is None else resamples
    rng = make_rng(derive_seed(record.seed, BOOTSTRAP_STREAM))
    total = int(counts.sum())
    flat = counts.ravel() / total
    replicates = np.array(
        [
            _conditional_entropy(rng.multinomial(total, flat).reshape(n, n))
            for _ in range(resamples)
        ]
    )
    standard_error = float(replicates.std(ddof=1)) if resamples > 1 else 0.0

    logger.info(f"Empirical erasure {estimate:.6f} +/- {standard_error:.6f} bits")
    return EmpiricalErasure(
        estimate=BitQuantity(estimate),
        standard_error=standard_error,
        excluded_states=excluded,
        transitions=total,
    )


def state_frequencies(
    record: TrajectoryRecord,
    machine: EpsilonMachine,
    *,
    batches: int | None = None,
) -> StateFrequencies:
    """
    Visit frequency of each state with a batch-means standard error.

    Batch means account for the serial correlation of the chain, which
    i.i.d. binomial errors would understate.
    """
    batches = get_settings().machine.batch_count if batches is None else batches
    if batches < 2 or len(record) < batches:
        raise DomainError("batches", batches, f"2 <= batches <= {len(record)}")
    n = machine.n_states
    frequencies = np.bincount(record.states, minlength=n) / len(record)

    size = len(record) // batches
    blocks = record.states[: size * batches].reshape(batches, size)
    per_batch = np.stack([np.bincount(block, minlength=n) / size for block in blocks])
    errors = per_batch.std(axis=0, ddof=1) / math.sqrt(batches)
    return StateFrequencies(frequencies=frequencies, standard_errors=errors, batches=batches)
