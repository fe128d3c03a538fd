"""Tests for dyadic-angle qubit measurement and the dyadic machine family."""

import math

import numpy as np
import pytest

from erasure_audit.bounds import erased_information
from erasure_audit.core import DomainError
from erasure_audit.mechanics import (
    EpsilonMachine,
    mean_erased_information,
    reverse_kernel,
    statistical_complexity,
)
from erasure_audit.qubit import (
    BasisChoice,
    DyadicAngle,
    born,
    build_dyadic_machine,
    collapse,
    dyadic_bases,
    dyadic_states,
    projector_probability,
)

TOL = 1e-12


def basis(numerator: int, level: int) -> BasisChoice:
    return BasisChoice(DyadicAngle(numerator, level))


class TestDyadicAngle:
    def test_radians(self):
        assert DyadicAngle(1, 3).radians == pytest.approx(math.pi / 8)

    @pytest.mark.parametrize("numerator, level", [(4, 2), (-1, 2), (0, 0), (0, 26)])
    def test_rejects_out_of_range(self, numerator, level):
        with pytest.raises(DomainError):
            DyadicAngle(numerator, level)

    def test_wrap(self):
        assert DyadicAngle.wrap(5, 2) == DyadicAngle(1, 2)
        assert DyadicAngle.wrap(-1, 2) == DyadicAngle(3, 2)

    def test_at_level(self):
        assert DyadicAngle(1, 1).at_level(3) == DyadicAngle(4, 3)
        with pytest.raises(DomainError):
            DyadicAngle(1, 3).at_level(2)

    def test_same_ray_across_levels(self):
        assert DyadicAngle(1, 1).same_ray(DyadicAngle(2, 2))
        assert not DyadicAngle(1, 2).same_ray(DyadicAngle(1, 3))

    def test_orthogonal(self):
        assert DyadicAngle(0, 2).orthogonal() == DyadicAngle(2, 2)
        assert DyadicAngle(3, 2).orthogonal() == DyadicAngle(1, 2)

    def test_basis_must_lie_below_half_pi(self):
        with pytest.raises(DomainError):
            basis(2, 2)
        assert basis(1, 2).projectors == (DyadicAngle(1, 2), DyadicAngle(3, 2))


class TestBorn:
    def test_aligned_state_is_certain(self):
        assert born(DyadicAngle(0, 2), basis(0, 2)) == 1.0

    def test_diagonal_basis_is_even(self):
        assert born(DyadicAngle(0, 2), basis(1, 2)) == pytest.approx(0.5, abs=TOL)

    def test_eighth_turn(self):
        assert born(DyadicAngle(1, 3), basis(0, 3)) == pytest.approx(
            math.cos(math.pi / 8) ** 2, abs=TOL
        )

    def test_orthogonal_state_never_gives_zero(self):
        assert born(DyadicAngle(2, 2), basis(0, 2)) == 0.0

    @pytest.mark.parametrize("level", [2, 3, 5, 8])
    def test_outcomes_are_complete_exactly(self, level):
        for state in (DyadicAngle(j, level) for j in range(1 << level)):
            for b in (BasisChoice(DyadicAngle(k, level)) for k in range(1 << (level - 1))):
                zero, one = (projector_probability(state, p) for p in b.projectors)
                assert zero + one == 1.0
                assert born(state, b) == zero

    def test_mixed_levels(self):
        assert born(DyadicAngle(1, 1), basis(1, 3)) == pytest.approx(
            math.cos(3 * math.pi / 8) ** 2, abs=TOL
        )


class TestCollapse:
    @pytest.mark.parametrize(
        "numerator, outcome, expected",
        [(0, 0, 0.0), (0, 1, math.pi / 2), (1, 1, 3 * math.pi / 4), (1, 0, math.pi / 4)],
    )
    def test_post_measurement_angle(self, numerator, outcome, expected):
        assert collapse(basis(numerator, 2), outcome).radians == pytest.approx(expected)

    def test_rejects_bad_outcome(self):
        with pytest.raises(DomainError):
            collapse(basis(0, 2), 2)

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_repeat_measurement_is_certain(self, n):
        for b in dyadic_bases(n):
            for outcome in (0, 1):
                assert projector_probability(collapse(b, outcome), b.projectors[outcome]) == 1.0

    @pytest.mark.parametrize("n", [1, 3])
    def test_family_is_closed(self, n):
        states = set(dyadic_states(n))
        for b in dyadic_bases(n):
            for outcome in (0, 1):
                assert collapse(b, outcome) in states


class TestDyadicMachine:
    @pytest.mark.parametrize("n", [0, 13, -2])
    def test_rejects_index(self, n):
        with pytest.raises(DomainError):
            build_dyadic_machine(n)

    def test_n1_shape(self):
        machine = build_dyadic_machine(1)
        assert machine.n_states == 4
        assert machine.n_choices == 2
        assert machine.outcomes == (0, 1)
        assert machine.is_unifilar

    def test_n1_chain_is_cos2_over_choices(self):
        machine = build_dyadic_machine(1)
        i, j = np.meshgrid(np.arange(4), np.arange(4), indexing="ij")
        expected = np.cos(np.pi * (i - j) / 4) ** 2 / 2
        np.testing.assert_allclose(machine.transition_matrix, expected, atol=TOL)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_doubly_stochastic(self, n):
        matrix = build_dyadic_machine(n).transition_matrix
        np.testing.assert_allclose(matrix.sum(axis=0), 1.0, atol=TOL)
        np.testing.assert_allclose(matrix.sum(axis=1), 1.0, atol=TOL)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_matches_closed_form(self, n):
        machine = build_dyadic_machine(n)
        assert mean_erased_information(machine).value == pytest.approx(
            erased_information(n).value, abs=1e-9
        )
        assert statistical_complexity(machine).value == pytest.approx(n + 1, abs=1e-9)

    def test_reverse_rows_are_causal_weights(self):
        rows = reverse_kernel(build_dyadic_machine(2))
        weights = np.cos(np.pi * np.arange(8) / 8) ** 2 / 4
        np.testing.assert_allclose(np.sort(rows[3].entries), np.sort(weights), atol=TOL)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_measurement_rules(self, n):
        states, bases = dyadic_states(n), dyadic_bases(n)
        rows = [
            (
                j,
                k,
                outcome,
                collapse(b, outcome).numerator,
                projector_probability(s, b.projectors[outcome]),
            )
            for j, s in enumerate(states)
            for k, b in enumerate(bases)
            for outcome in (0, 1)
        ]
        reference = EpsilonMachine(range(len(states)), range(len(bases)), [0, 1], rows)
        machine = build_dyadic_machine(n)

        assert machine.n_transitions == reference.n_transitions == 2 ** (2 * n + 2) - 2 ** (n + 1)
        for built, expected in zip(machine.edges[:4], reference.edges[:4], strict=True):
            np.testing.assert_array_equal(built, expected)
        np.testing.assert_array_equal(machine.edges[4], reference.edges[4])

    def test_edges_use_compact_indices(self):
        src, choice, outcome, dst, _ = build_dyadic_machine(5).edges
        assert {a.dtype for a in (src, choice, outcome, dst)} == {np.dtype(np.int32)}

    @pytest.mark.slow
    def test_largest_family_member_builds(self):
        machine = build_dyadic_machine(12)
        assert machine.n_states == 2**13
        assert machine.n_transitions == 2**26 - 2**13
        assert machine.is_unifilar

    def test_weighted_choices(self):
        machine = build_dyadic_machine(1, choice_probabilities=[1.0, 0.0])
        # only the 0 / pi/2 basis is ever used
        assert machine.transition_matrix[1, 1] == 0.0
        assert machine.transition_matrix[1, 0] == pytest.approx(0.5)
