"""Tests for machine-definition files."""

import numpy as np
import pytest

from erasure_audit.config import configure
from erasure_audit.core import MachineDefinitionError
from erasure_audit.mechanics import dump_machine, load_machine, parse_machine, stationary
from erasure_audit.qubit import build_dyadic_machine

GOLDEN_YAML = """\
states: [A, B]
choices: [c]
outcomes: [0, 1]
kernel:
  - {state: A, choice: c, outcome: 0, next: A, probability: 0.5}
  - {state: A, choice: c, outcome: 1, next: B, probability: 0.5}
  - {state: B, choice: c, outcome: 0, next: A, probability: 1.0}
"""


class TestLoad:
    def test_bare_choice_ids_are_uniform(self, tmp_path):
        path = tmp_path / "golden.yaml"
        path.write_text(GOLDEN_YAML)
        machine = load_machine(path)
        assert machine.states == ("A", "B")
        assert machine.choice_distribution["c"] == 1.0
        assert stationary(machine)["A"] == pytest.approx(2 / 3, abs=1e-10)

    def test_weighted_choices(self):
        machine = parse_machine(
            {
                "states": ["s"],
                "choices": [{"id": "x", "probability": 0.25}, {"id": "z", "probability": 0.75}],
                "outcomes": [0],
                "kernel": [
                    {"state": "s", "choice": "x", "outcome": 0, "next": "s", "probability": 1},
                    {"state": "s", "choice": "z", "outcome": 0, "next": "s", "probability": 1},
                ],
            }
        )
        assert machine.choice_distribution.as_dict() == {"x": 0.25, "z": 0.75}

    def test_partial_choice_probabilities(self):
        with pytest.raises(MachineDefinitionError, match="every choice"):
            parse_machine(
                {
                    "states": ["s"],
                    "choices": [{"id": "x", "probability": 1.0}, "z"],
                    "outcomes": [0],
                    "kernel": [],
                }
            )

    def test_missing_file(self, tmp_path):
        with pytest.raises(MachineDefinitionError, match="not found"):
            load_machine(tmp_path / "absent.yaml")

    def test_unparseable_file(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("states: [a, b\n")
        with pytest.raises(MachineDefinitionError, match="Cannot parse"):
            load_machine(path)

    def test_missing_section(self):
        with pytest.raises(MachineDefinitionError):
            parse_machine({"states": ["a"], "outcomes": [0], "kernel": []})

    def test_bad_row_sum(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text(GOLDEN_YAML.replace("probability: 1.0}", "probability: 0.9}"))
        with pytest.raises(MachineDefinitionError, match="sums to"):
            load_machine(path)

    def test_row_tolerance_setting_applies(self, tmp_path):
        path = tmp_path / "loose.yaml"
        path.write_text(GOLDEN_YAML.replace("probability: 1.0}", "probability: 0.9999}"))
        with pytest.raises(MachineDefinitionError, match="sums to"):
            load_machine(path)

        configure(machine={"row_tolerance": 1e-3})
        machine = load_machine(path)
        assert machine.n_transitions == 3


class TestDump:
    def test_dyadic_round_trip(self, tmp_path):
        machine = build_dyadic_machine(2)
        path = dump_machine(machine, tmp_path / "nested" / "dyadic.yaml")
        loaded = load_machine(path)
        assert loaded.n_transitions == machine.n_transitions
        np.testing.assert_array_equal(loaded.transition_matrix, machine.transition_matrix)
        np.testing.assert_array_equal(
            loaded.choice_distribution.entries, machine.choice_distribution.entries
        )

    def test_uses_next_key(self, tmp_path, flip_machine):
        text = dump_machine(flip_machine, tmp_path / "flip.yaml").read_text()
        assert "next:" in text
        assert "next_state" not in text
