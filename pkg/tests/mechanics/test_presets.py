"""Tests for the named machine presets."""

import pytest

from erasure_audit.core import DomainError
from erasure_audit.mechanics import is_irreducible
from erasure_audit.presets import MACHINE_PRESETS, get_preset, list_presets


def test_list_presets_order():
    assert list_presets() == [
        "single-state",
        "symmetric-flip",
        "three-cycle",
        "identity-pair",
        "golden-mean",
        "dyadic-qubit-1",
    ]


def test_unknown_preset():
    with pytest.raises(DomainError, match="preset"):
        get_preset("no-such-machine")


@pytest.mark.parametrize("name", list(MACHINE_PRESETS))
def test_irreducible_flag_matches_structure(name):
    preset = get_preset(name)
    assert is_irreducible(preset.build()) is preset.irreducible
    assert (preset.erased_bits is None) is not preset.irreducible


def test_builds_fresh_machines():
    preset = get_preset("golden-mean")
    assert preset.build() is not preset.build()
