"""
Real-amplitude qubit states at dyadic angles.

A state is the ray at angle pi j / 2^m (taken modulo pi). Measuring in the
basis at angle theta yields outcome 0 with probability cos^2(phi - theta)
and collapses onto theta; outcome 1 collapses onto theta + pi/2.

The family indexed by n uses the 2^(n+1) states pi j / 2^(n+1) and the 2^n
bases pi k / 2^(n+1) in [0, pi/2). Collapse keeps every state inside the
family, and the reversed step of the resulting machine reproduces the
causal-state weights cos^2(pi j / 2^(n+1)) / 2^n.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike

from erasure_audit.core.exceptions import DomainError
from erasure_audit.mechanics.machine import EpsilonMachine
from erasure_audit.utils.trig import dyadic_cos2

logger = logging.getLogger(__name__)

MAX_LEVEL = 25
MIN_MACHINE_INDEX = 1
MAX_MACHINE_INDEX = 12


@dataclass(frozen=True, order=True)
class DyadicAngle:
    """
    The angle pi * numerator / 2^level, modulo pi.

    Example:
        >>> DyadicAngle(3, 2).radians == 3 * math.pi / 4
        True
    """

    numerator: int
    level: int

    def __post_init__(self) -> None:
        if not 1 <= self.level <= MAX_LEVEL:
            raise DomainError("level", self.level, f"1 <= level <= {MAX_LEVEL}")
        if not 0 <= self.numerator < (1 << self.level):
            raise DomainError("numerator", self.numerator, f"0 <= j < 2^{self.level}")

    @classmethod
    def wrap(cls, numerator: int, level: int) -> "DyadicAngle":
        """Angle with numerator reduced modulo 2^level."""
        return cls(numerator % (1 << level), level)

    @property
    def radians(self) -> float:
        return math.pi * self.numerator / (1 << self.level)

    def at_level(self, level: int) -> "DyadicAngle":
        """Same angle expressed over 2^level (level must not be coarser)."""
        if level < self.level:
            raise DomainError("level", level, f">= {self.level}")
        return DyadicAngle(self.numerator << (level - self.level), level)

    def orthogonal(self) -> "DyadicAngle":
        """The angle plus pi/2."""
        return DyadicAngle.wrap(self.numerator + (1 << (self.level - 1)), self.level)

    def same_ray(self, other: "DyadicAngle") -> bool:
        level = max(self.level, other.level)
        return self.at_level(level) == other.at_level(level)


@dataclass(frozen=True)
class BasisChoice:
    """Measurement basis with projectors at ``angle`` and ``angle + pi/2``."""

    angle: DyadicAngle

    def __post_init__(self) -> None:
        if 2 * self.angle.numerator >= (1 << self.angle.level):
            raise DomainError("basis angle", self.angle, "< pi/2")

    @property
    def projectors(self) -> tuple[DyadicAngle, DyadicAngle]:
        return self.angle, self.angle.orthogonal()


def projector_probability(state: DyadicAngle, projector: DyadicAngle) -> float:
    """cos^2 of the angle between a state and a projector ray."""
    level = max(state.level, projector.level)
    difference = state.at_level(level).numerator - projector.at_level(level).numerator
    return float(dyadic_cos2(difference, 1 << level))


def born(state: DyadicAngle, basis: BasisChoice) -> float:
    """
    Probability of the outcome aligned with the basis angle.

    The complementary outcome has probability ``1 - born(state, basis)``,
    which equals :func:`projector_probability` at the orthogonal projector.
    """
    return projector_probability(state, basis.angle)


def collapse(basis: BasisChoice, outcome: int) -> DyadicAngle:
    """Post-measurement state: the basis angle for 0, its orthogonal for 1."""
    if outcome not in (0, 1):
        raise DomainError("outcome", outcome, "0 or 1")
    return basis.projectors[outcome]


def _check_machine_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError("n", n, "an integer")
    if not MIN_MACHINE_INDEX <= n <= MAX_MACHINE_INDEX:
        raise DomainError("n", n, f"{MIN_MACHINE_INDEX} <= n <= {MAX_MACHINE_INDEX}")


def dyadic_states(n: int) -> list[DyadicAngle]:
    """The 2^(n+1) states pi j / 2^(n+1); state id j is list position j."""
    level = n + 1
    return [DyadicAngle(j, level) for j in range(1 << level)]


def dyadic_bases(n: int) -> list[BasisChoice]:
    """The 2^n bases pi k / 2^(n+1), k = 0 .. 2^n - 1; choice id k is position k."""
    level = n + 1
    return [BasisChoice(DyadicAngle(k, level)) for k in range(1 << n)]


def build_dyadic_machine(n: int, choice_probabilities: ArrayLike | None = None) -> EpsilonMachine:
    """
    Measurement machine of the dyadic family.

    State ids are the integers j (angle pi j / 2^(n+1)), choice ids the
    integers k (basis angle pi k / 2^(n+1)), outcome labels 0 and 1. Choices
    are uniform unless ``choice_probabilities`` is given.

    Raises:
        DomainError: If n is outside 1..12
    """
    _check_machine_index(n)
    n_states, n_choices = 1 << (n + 1), 1 << n

    # Every state j lies on one projector of basis k = j mod 2^n; the other
    # outcome of that (state, basis) row has probability 0 and gets no edge.
    # Rows are laid out (state, basis) major with outcomes 0, 1 inside.
    j = np.arange(n_states, dtype=np.int64)
    aligned_row = j * n_choices + j % n_choices
    dropped = 2 * aligned_row + (j < n_choices)

    src = np.delete(np.repeat(np.arange(n_states, dtype=np.int32), 2 * n_choices), dropped)
    choice = np.delete(
        np.tile(np.repeat(np.arange(n_choices, dtype=np.int32), 2), n_states), dropped
    )
    outcome = np.delete(np.tile(np.array([0, 1], dtype=np.int32), n_states * n_choices), dropped)
    # collapse: outcome 0 -> basis angle k, outcome 1 -> k + pi/2
    dst = choice + outcome * np.int32(n_choices)
    cos2_table = dyadic_cos2(np.arange(n_states, dtype=np.int64), n_states)
    probability = cos2_table[(src - dst) % np.int32(n_states)]

    machine = EpsilonMachine.from_arrays(
        states=list(range(n_states)),
        choices=list(range(n_choices)),
        outcomes=[0, 1],
        src=src,
        choice=choice,
        outcome=outcome,
        dst=dst,
        probability=probability,
        choice_probabilities=choice_probabilities,
    )
    logger.info(f"Built dyadic machine n={n}: {machine!r}")
    return machine
