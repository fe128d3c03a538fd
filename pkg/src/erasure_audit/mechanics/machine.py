"""
Finite labeled stochastic machines over causal states.

A machine has ordered states, measurement choices drawn i.i.d. from a choice
distribution, outcome labels, and a kernel giving, for every
(state, choice), a distribution over (outcome, next state) pairs.

The kernel is stored as a sorted edge list (one entry per nonzero
transition), so machines whose rows are sparse stay small even when the
state set is large.
"""

import logging
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Any

import numpy as np
from numpy.typing import ArrayLike, NDArray

from erasure_audit.config import get_settings
from erasure_audit.core.exceptions import DomainError, MachineDefinitionError
from erasure_audit.core.quantities import ProbabilityVector

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Transition:
    """One kernel entry: (state, choice) -> (outcome, next_state) w.p. probability."""

    state: Hashable
    choice: Hashable
    outcome: Hashable
    next_state: Hashable
    probability: float


def _index(ids: Sequence[Hashable], kind: str) -> dict[Hashable, int]:
    lookup = {item: i for i, item in enumerate(ids)}
    if not ids:
        raise MachineDefinitionError(f"Machine needs at least one {kind}")
    if len(lookup) != len(ids):
        raise MachineDefinitionError(f"Duplicate {kind} ids: {list(ids)}")
    return lookup


def _strictly_increasing(*keys: NDArray[Any]) -> bool:
    """Whether consecutive rows of the key columns (most significant first) strictly increase."""
    if keys[0].size < 2:
        return True
    increasing = np.zeros(keys[0].size - 1, dtype=bool)
    tied = np.ones(keys[0].size - 1, dtype=bool)
    for key in keys:
        step = np.diff(key)
        increasing |= tied & (step > 0)
        tied &= step == 0
    return bool(increasing.all())


class EpsilonMachine:
    """
    Immutable stochastic machine with measurement choices.

    Example:
        >>> flip = EpsilonMachine(
        ...     states=["a", "b"],
        ...     choices=["c"],
        ...     outcomes=[0, 1],
        ...     transitions=[
        ...         ("a", "c", 0, "a", 0.5), ("a", "c", 1, "b", 0.5),
        ...         ("b", "c", 0, "a", 0.5), ("b", "c", 1, "b", 0.5),
        ...     ],
        ... )
        >>> flip.n_states
        2
    """

    def __init__(
        self,
        states: Sequence[Hashable],
        choices: Sequence[Hashable],
        outcomes: Sequence[Hashable],
        transitions: Iterable[Transition | tuple[Hashable, Hashable, Hashable, Hashable, float]],
        choice_probabilities: ArrayLike | None = None,
        *,
        row_tolerance: float | None = None,
    ):
        state_index = _index(states, "state")
        choice_index = _index(choices, "choice")
        outcome_index = _index(outcomes, "outcome")

        rows: list[tuple[int, int, int, int, float]] = []
        for entry in transitions:
            t = entry if isinstance(entry, Transition) else Transition(*entry)
            try:
                rows.append(
                    (
                        state_index[t.state],
                        choice_index[t.choice],
                        outcome_index[t.outcome],
                        state_index[t.next_state],
                        float(t.probability),
                    )
                )
            except KeyError as e:
                raise MachineDefinitionError(f"Unknown id {e.args[0]!r} in transition {t}") from e

        columns = np.array(rows, dtype=np.float64).reshape(-1, 5)
        self._init_arrays(
            states,
            choices,
            outcomes,
            src=columns[:, 0],
            choice=columns[:, 1],
            outcome=columns[:, 2],
            dst=columns[:, 3],
            probability=columns[:, 4],
            choice_probabilities=choice_probabilities,
            row_tolerance=row_tolerance,
        )

    @classmethod
    def from_arrays(
        cls,
        states: Sequence[Hashable],
        choices: Sequence[Hashable],
        outcomes: Sequence[Hashable],
        *,
        src: ArrayLike,
        choice: ArrayLike,
        outcome: ArrayLike,
        dst: ArrayLike,
        probability: ArrayLike,
        choice_probabilities: ArrayLike | None = None,
        row_tolerance: float | None = None,
    ) -> "EpsilonMachine":
        """
        Build from parallel index arrays (vectorized construction).

        Indices refer to positions in ``states``, ``choices`` and ``outcomes``.
        """
        _index(states, "state")
        _index(choices, "choice")
        _index(outcomes, "outcome")
        machine = cls.__new__(cls)
        machine._init_arrays(
            states,
            choices,
            outcomes,
            src=np.asarray(src),
            choice=np.asarray(choice),
            outcome=np.asarray(outcome),
            dst=np.asarray(dst),
            probability=np.asarray(probability, dtype=np.float64),
            choice_probabilities=choice_probabilities,
            row_tolerance=row_tolerance,
        )
        return machine

    def _init_arrays(
        self,
        states: Sequence[Hashable],
        choices: Sequence[Hashable],
        outcomes: Sequence[Hashable],
        *,
        src: NDArray[Any],
        choice: NDArray[Any],
        outcome: NDArray[Any],
        dst: NDArray[Any],
        probability: NDArray[np.float64],
        choice_probabilities: ArrayLike | None,
        row_tolerance: float | None,
    ) -> None:
        self.states: tuple[Hashable, ...] = tuple(states)
        self.choices: tuple[Hashable, ...] = tuple(choices)
        self.outcomes: tuple[Hashable, ...] = tuple(outcomes)
        n_states, n_choices, n_outcomes = len(self.states), len(self.choices), len(self.outcomes)

        n_rows = n_states * n_choices
        index_dtype = np.int32 if n_rows < 2**31 else np.int64
        src, choice, outcome, dst = (
            a.astype(index_dtype, copy=False) for a in (src, choice, outcome, dst)
        )

        for name, values, bound in (
            ("state", src, n_states),
            ("choice", choice, n_choices),
            ("outcome", outcome, n_outcomes),
            ("next state", dst, n_states),
        ):
            if values.size and (values.min() < 0 or values.max() >= bound):
                raise MachineDefinitionError(f"{name} index out of range")

        if np.any(~np.isfinite(probability)) or np.any(probability < 0) or np.any(probability > 1):
            raise MachineDefinitionError("Kernel probabilities must lie in [0, 1]")

        if choice_probabilities is None:
            weights = np.full(n_choices, 1.0 / n_choices)
        else:
            weights = np.asarray(choice_probabilities, dtype=np.float64)
        try:
            self.choice_distribution = ProbabilityVector(self.choices, weights)
        except DomainError as e:
            raise MachineDefinitionError(f"Invalid choice distribution: {e}") from e

        # Zero-probability entries carry no transition
        keep = probability > 0
        if not keep.all():
            src, choice, outcome, dst, probability = (
                src[keep],
                choice[keep],
                outcome[keep],
                dst[keep],
                probability[keep],
            )
        del keep

        row = src * index_dtype(n_choices) + choice
        if not _strictly_increasing(row, outcome, dst):
            order = np.lexsort((dst, outcome, row))
            src, choice, outcome, dst, probability, row = (
                a[order] for a in (src, choice, outcome, dst, probability, row)
            )
            del order
            if not _strictly_increasing(row, outcome, dst):
                raise MachineDefinitionError(
                    "Duplicate (state, choice, outcome, next state) entries"
                )
        self._src, self._choice, self._outcome, self._dst = src, choice, outcome, dst
        self._probability, self._row = probability, row

        tolerance = row_tolerance
        if tolerance is None:
            tolerance = get_settings().machine.row_tolerance
        row_sums = np.bincount(self._row, weights=self._probability, minlength=n_rows)
        bad = np.flatnonzero(np.abs(row_sums - 1.0) > tolerance)
        if bad.size:
            r = int(bad[0])
            state, c = self.states[r // n_choices], self.choices[r % n_choices]
            raise MachineDefinitionError(
                f"Kernel row ({state!r}, {c!r}) sums to {row_sums[r]:.15g}, expected 1"
            )
        del row_sums

        counts = np.bincount(self._row, minlength=n_rows)
        self._row_start = np.concatenate(([0], np.cumsum(counts))).astype(np.int64)

        for array in (
            self._src,
            self._choice,
            self._outcome,
            self._dst,
            self._probability,
            self._row,
        ):
            array.setflags(write=False)

        logger.debug(
            f"Machine with {n_states} states, {n_choices} choices, "
            f"{self._probability.size} transitions"
        )

    # === Shape ===

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_choices(self) -> int:
        return len(self.choices)

    @property
    def n_outcomes(self) -> int:
        return len(self.outcomes)

    @property
    def n_transitions(self) -> int:
        return int(self._probability.size)

    def state_index(self, state: Hashable) -> int:
        try:
            return self.states.index(state)
        except ValueError as e:
            raise MachineDefinitionError(f"Unknown state {state!r}") from e

    # === Kernel ===

    @property
    def edges(
        self,
    ) -> tuple[NDArray[Any], NDArray[Any], NDArray[Any], NDArray[Any], NDArray[np.float64]]:
        """
        (src, choice, outcome, dst, probability) arrays, sorted by row, then
        outcome, then next state. Indices are int32 unless the machine is too
        large for it.
        """
        return self._src, self._choice, self._outcome, self._dst, self._probability

    @property
    def row_start(self) -> NDArray[np.int64]:
        """Offsets into :attr:`edges`; row ``s * n_choices + c`` spans [start[r], start[r+1])."""
        return self._row_start

    def kernel_row(self, state: Hashable, choice: Hashable) -> ProbabilityVector:
        """Distribution over (outcome, next_state) pairs for one (state, choice)."""
        r = self.state_index(state) * self.n_choices + self.choices.index(choice)
        lo, hi = self._row_start[r], self._row_start[r + 1]
        base = [
            (self.outcomes[o], self.states[d])
            for o, d in zip(self._outcome[lo:hi], self._dst[lo:hi], strict=True)
        ]
        return ProbabilityVector(base, self._probability[lo:hi])

    def transitions(self) -> list[Transition]:
        """All nonzero kernel entries with ids."""
        return [
            Transition(
                self.states[s], self.choices[c], self.outcomes[o], self.states[d], float(p)
            )
            for s, c, o, d, p in zip(*self.edges, strict=True)
        ]

    @cached_property
    def is_unifilar(self) -> bool:
        """Whether (state, choice, outcome) determines the next state."""
        # Edges are sorted by (row, outcome), so a repeat is adjacent
        repeated = (np.diff(self._row) == 0) & (np.diff(self._outcome) == 0)
        return not bool(repeated.any())

    @cached_property
    def transition_matrix(self) -> NDArray[np.float64]:
        """
        Choice-marginalized chain P(s'|s) = sum_c P(c) sum_o kernel(s,c)(o,s').
        """
        n = self.n_states
        weights = self._probability * self.choice_distribution.entries[self._choice]
        flat = self._src.astype(np.int64) * n + self._dst
        matrix = np.bincount(flat, weights=weights, minlength=n * n)
        matrix = matrix.reshape(n, n)
        matrix.setflags(write=False)
        return matrix

    def __repr__(self) -> str:
        return (
            f"EpsilonMachine(states={self.n_states}, choices={self.n_choices}, "
            f"outcomes={self.n_outcomes}, transitions={self.n_transitions})"
        )
