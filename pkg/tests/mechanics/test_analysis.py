"""Tests for stationary analysis, complexity and erased information."""

import math

import numpy as np
import pytest

from erasure_audit.core import ConvergenceError, StructuralError
from erasure_audit.mechanics import (
    EpsilonMachine,
    is_irreducible,
    mean_erased_information,
    reverse_kernel,
    stationarity_residual,
    stationary,
    statistical_complexity,
)
from erasure_audit.presets import IDENTITY_PAIR, MACHINE_PRESETS, SINGLE_STATE
from erasure_audit.qubit import build_dyadic_machine


def permutation_machine(size: int) -> EpsilonMachine:
    states = list(range(size))
    return EpsilonMachine(
        states, ["p"], [0], [(s, "p", 0, (s + 2) % size, 1.0) for s in states]
    )


class TestStationary:
    def test_symmetric_flip(self, flip_machine):
        pi = stationary(flip_machine)
        np.testing.assert_allclose(pi.entries, [0.5, 0.5], atol=1e-12)

    def test_golden_mean(self, golden_machine):
        pi = stationary(golden_machine)
        assert pi["A"] == pytest.approx(2 / 3, abs=1e-10)
        assert pi["B"] == pytest.approx(1 / 3, abs=1e-10)

    def test_periodic_chain_converges(self, cycle_machine):
        pi = stationary(cycle_machine)
        np.testing.assert_allclose(pi.entries, 1 / 3, atol=1e-10)

    def test_reducible_chain(self):
        machine = IDENTITY_PAIR.build()
        assert not is_irreducible(machine)
        with pytest.raises(StructuralError):
            stationary(machine)

    def test_iteration_cap(self, golden_machine):
        with pytest.raises(ConvergenceError) as info:
            stationary(golden_machine, max_iterations=3)
        assert info.value.iterations == 3

    @pytest.mark.parametrize("name", [n for n, p in MACHINE_PRESETS.items() if p.irreducible])
    def test_residual_below_tolerance(self, name):
        machine = MACHINE_PRESETS[name].build()
        assert stationarity_residual(machine, stationary(machine)) < 1e-12

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_dyadic_is_uniform(self, n):
        pi = stationary(build_dyadic_machine(n))
        np.testing.assert_allclose(pi.entries, 1 / 2 ** (n + 1), atol=1e-10)

    def test_deterministic(self, golden_machine):
        first = stationary(golden_machine).entries
        second = stationary(golden_machine).entries
        np.testing.assert_array_equal(first, second)


class TestComplexity:
    def test_single_state(self):
        assert statistical_complexity(SINGLE_STATE.build()).value == 0.0

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dyadic_is_n_plus_one(self, n):
        assert statistical_complexity(build_dyadic_machine(n)).value == pytest.approx(
            n + 1, abs=1e-9
        )

    @pytest.mark.parametrize("name", [n for n, p in MACHINE_PRESETS.items() if p.irreducible])
    def test_presets_match_expected(self, name):
        preset = MACHINE_PRESETS[name]
        machine = preset.build()
        assert statistical_complexity(machine).value == pytest.approx(
            preset.complexity_bits, abs=1e-9
        )
        assert mean_erased_information(machine).value == pytest.approx(
            preset.erased_bits, abs=1e-9
        )


class TestReverseKernel:
    def test_cycle_rows_are_point_masses(self, cycle_machine):
        rows = reverse_kernel(cycle_machine)
        assert rows["b"].as_dict() == pytest.approx({"a": 1.0, "b": 0.0, "c": 0.0})
        assert rows["a"]["c"] == pytest.approx(1.0)

    def test_flip_rows_are_uniform(self, flip_machine):
        for row in reverse_kernel(flip_machine).values():
            np.testing.assert_allclose(row.entries, [0.5, 0.5])

    def test_dyadic_rows_are_rotated_causal_distribution(self):
        rows = reverse_kernel(build_dyadic_machine(1))
        base = np.array([0.5, 0.25, 0.0, 0.25])
        for j, row in rows.items():
            np.testing.assert_allclose(row.entries, np.roll(base, j), atol=1e-12)

    def test_bayes_consistency(self, golden_machine):
        pi = stationary(golden_machine).entries
        matrix = golden_machine.transition_matrix
        inflow = pi @ matrix
        np.testing.assert_allclose(inflow, pi, atol=1e-10)
        for j, row in enumerate(reverse_kernel(golden_machine).values()):
            np.testing.assert_allclose(row.entries * inflow[j], pi * matrix[:, j], atol=1e-12)

    def test_transient_state_is_rejected(self):
        # nothing flows back into c
        machine = EpsilonMachine(
            ["a", "b", "c"],
            ["x"],
            [0, 1],
            [
                ("a", "x", 0, "a", 0.5),
                ("a", "x", 1, "b", 0.5),
                ("b", "x", 0, "a", 1.0),
                ("c", "x", 0, "a", 1.0),
            ],
        )
        assert not is_irreducible(machine)
        with pytest.raises(StructuralError):
            reverse_kernel(machine)


class TestErasedInformation:
    def test_permutation_erases_nothing(self):
        assert mean_erased_information(permutation_machine(5)).value == pytest.approx(0.0)

    def test_flip_erases_one_bit(self, flip_machine):
        assert mean_erased_information(flip_machine).value == pytest.approx(1.0)

    def test_golden_mean(self, golden_machine):
        assert mean_erased_information(golden_machine).value == pytest.approx(2 / 3)

    @pytest.mark.parametrize("name", [n for n, p in MACHINE_PRESETS.items() if p.irreducible])
    def test_bounded_by_complexity(self, name):
        machine = MACHINE_PRESETS[name].build()
        erased = mean_erased_information(machine).value
        assert erased <= statistical_complexity(machine).value + 1e-12

    def test_complexity_of_golden_mean(self, golden_machine):
        expected = -(2 / 3) * math.log2(2 / 3) - (1 / 3) * math.log2(1 / 3)
        assert statistical_complexity(golden_machine).value == pytest.approx(expected)
