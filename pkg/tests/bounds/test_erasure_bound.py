"""Tests for the erased-information bound and Landauer heat."""

import math

import numpy as np
import pytest

from erasure_audit.bounds import (
    LN2,
    MAX_FAMILY_INDEX,
    bits_to_kt,
    bound_report,
    causal_state_distribution,
    cos2_weights,
    erased_information,
    erasure_table,
    kt_to_bits,
    landauer_heat,
    qubit_landauer_ceiling,
    weight_sum,
)
from erasure_audit.core import BitQuantity, DomainError

BOLTZMANN = 1.380649e-23
FAMILY = range(1, 17)


def brute_force_erased(n: int) -> float:
    """Independent evaluation straight from the cos^2 definition."""
    size = 2 ** (n + 1)
    total = 0.0
    for j in range(size):
        p = math.cos(math.pi * j / size) ** 2 / 2**n
        if p > 1e-300:
            total -= p * math.log2(p)
    return total


class TestWeights:
    @pytest.mark.parametrize("n", FAMILY)
    def test_weights_sum_to_power_of_two(self, n):
        assert weight_sum(n) == pytest.approx(2**n, rel=1e-9)

    @pytest.mark.parametrize("n", [1, 2, 5, 10])
    def test_symmetry_is_exact(self, n):
        w = cos2_weights(n)
        size = w.size
        for j in range(1, size):
            assert w[j] == w[size - j]

    @pytest.mark.parametrize("n", [1, 3, 8])
    def test_orthogonal_pairs_sum_to_one_exactly(self, n):
        w = cos2_weights(n)
        half = w.size // 2
        np.testing.assert_array_equal(w[:half] + w[half:], np.ones(half))
        assert w[half] == 0.0
        assert w[0] == 1.0

    def test_n1_distribution(self):
        p = causal_state_distribution(1)
        np.testing.assert_allclose(p.entries, [0.5, 0.25, 0.0, 0.25], atol=1e-15)

    def test_distribution_is_normalized(self):
        p = causal_state_distribution(12)
        assert math.fsum(p.entries.tolist()) == pytest.approx(1.0, abs=1e-12)


class TestErasedInformation:
    def test_n1_is_one_and_a_half_bits(self):
        assert erased_information(1).value == pytest.approx(1.5, abs=1e-12)

    def test_n1_four_term_hand_sum(self):
        hand = -(0.5 * math.log2(0.5) + 0.25 * math.log2(0.25) + 0.25 * math.log2(0.25))
        assert erased_information(1).value == pytest.approx(hand, abs=1e-12)

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_brute_force(self, n):
        assert erased_information(n).value == pytest.approx(brute_force_erased(n), abs=1e-12)

    def test_n0_is_the_equality_case(self):
        assert erased_information(0).value == 0.0

    @pytest.mark.parametrize("n", FAMILY)
    def test_strictly_above_n(self, n):
        assert erased_information(n).value - n > 1e-6

    def test_grows_with_n(self):
        values = [erased_information(n).value for n in range(0, 17)]
        assert all(b > a for a, b in zip(values, values[1:]))

    def test_margin_stays_bounded(self):
        margins = [erased_information(n).value - n for n in FAMILY]
        assert max(margins) < 1.0

    def test_returns_bits(self):
        assert isinstance(erased_information(2), BitQuantity)

    @pytest.mark.parametrize("bad", [-1, MAX_FAMILY_INDEX + 1, 1.5, True, "2"])
    def test_rejects_bad_index(self, bad):
        with pytest.raises(DomainError):
            erased_information(bad)


class TestHeat:
    def test_landauer_heat_formula(self):
        heat = landauer_heat(1.5, 300.0)
        assert heat.value == pytest.approx(1.5 * BOLTZMANN * 300.0 * math.log(2), rel=1e-12)
        assert heat.temperature == 300.0

    def test_ceiling_is_one_bit(self):
        assert qubit_landauer_ceiling(300.0).value == pytest.approx(
            BOLTZMANN * 300.0 * math.log(2), rel=1e-12
        )

    def test_zero_bits_cost_nothing(self):
        assert landauer_heat(0.0, 10.0).value == 0.0

    @pytest.mark.parametrize("n", FAMILY)
    def test_ceiling_ratio_equals_erased_bits(self, n):
        erased = erased_information(n)
        ratio = landauer_heat(erased, 300.0).value / qubit_landauer_ceiling(300.0).value
        assert ratio == pytest.approx(erased.value, rel=1e-12)
        assert ratio > n

    @pytest.mark.parametrize("temperature", [0.0, -1.0, float("nan")])
    def test_rejects_bad_temperature(self, temperature):
        with pytest.raises(DomainError):
            landauer_heat(1.0, temperature)

    def test_rejects_negative_bits(self):
        with pytest.raises(DomainError):
            landauer_heat(-0.5, 300.0)

    def test_kt_conversion(self):
        assert bits_to_kt(1.0) == LN2
        assert kt_to_bits(bits_to_kt(3.0)) == pytest.approx(3.0)


class TestReports:
    def test_bound_report_fields(self):
        report = bound_report(1, 300.0)
        assert report.erased_bits == pytest.approx(1.5, abs=1e-12)
        assert report.lower_bound_bits == 1.0
        assert report.margin_bits == pytest.approx(0.5, abs=1e-12)
        assert report.ceiling_ratio == pytest.approx(1.5, rel=1e-12)
        assert set(report.to_dict()) >= {
            "n",
            "erased_bits",
            "lower_bound_bits",
            "heat_joules",
            "ceiling_joules",
        }

    def test_erasure_table_rows(self):
        rows = erasure_table(range(1, 6), 300.0)
        assert [r.n for r in rows] == [1, 2, 3, 4, 5]
        assert all(r.margin_bits > 0 for r in rows)
