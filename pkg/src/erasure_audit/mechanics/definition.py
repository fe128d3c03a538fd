"""
Machine-definition files.

YAML layout::

    states: [a, b]
    choices:                 # bare ids mean a uniform choice distribution
      - {id: x, probability: 1.0}
    outcomes: [0, 1]
    kernel:
      - {state: a, choice: x, outcome: 0, next: a, probability: 0.5}
      - {state: a, choice: x, outcome: 1, next: b, probability: 0.5}
      ...
"""

import logging
from pathlib import Path
from typing import Any

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from erasure_audit.core.exceptions import MachineDefinitionError
from erasure_audit.mechanics.machine import EpsilonMachine, Transition

logger = logging.getLogger(__name__)

Identifier = int | str


class ChoiceSpec(BaseModel):
    """A measurement choice with optional probability."""

    id: Identifier
    probability: float | None = Field(default=None, ge=0, le=1)


class KernelEntry(BaseModel):
    """One (state, choice, outcome -> next, probability) quadruple."""

    model_config = ConfigDict(populate_by_name=True)

    state: Identifier
    choice: Identifier
    outcome: Identifier
    next_state: Identifier = Field(alias="next")
    probability: float = Field(ge=0, le=1)


class MachineDefinition(BaseModel):
    """Validated contents of a machine-definition file."""

    states: list[Identifier]
    choices: list[ChoiceSpec | Identifier]
    outcomes: list[Identifier]
    kernel: list[KernelEntry]

    @model_validator(mode="after")
    def _choice_probabilities_all_or_none(self) -> "MachineDefinition":
        given = [c.probability is not None for c in self._choice_specs()]
        if any(given) and not all(given):
            raise ValueError("either every choice has a probability or none does")
        return self

    def _choice_specs(self) -> list[ChoiceSpec]:
        return [c if isinstance(c, ChoiceSpec) else ChoiceSpec(id=c) for c in self.choices]

    def to_machine(self) -> EpsilonMachine:
        specs = self._choice_specs()
        probabilities = None
        if specs and specs[0].probability is not None:
            probabilities = [float(c.probability or 0.0) for c in specs]
        return EpsilonMachine(
            states=self.states,
            choices=[c.id for c in specs],
            outcomes=self.outcomes,
            transitions=[
                Transition(e.state, e.choice, e.outcome, e.next_state, e.probability)
                for e in self.kernel
            ],
            choice_probabilities=probabilities,
        )

    @classmethod
    def from_machine(cls, machine: EpsilonMachine) -> "MachineDefinition":
        return cls(
            states=list(machine.states),  # type: ignore[arg-type]
            choices=[
                ChoiceSpec(id=c, probability=p)  # type: ignore[arg-type]
                for c, p in machine.choice_distribution.as_dict().items()
            ],
            outcomes=list(machine.outcomes),  # type: ignore[arg-type]
            kernel=[
                KernelEntry(
                    state=t.state,  # type: ignore[arg-type]
                    choice=t.choice,  # type: ignore[arg-type]
                    outcome=t.outcome,  # type: ignore[arg-type]
                    next=t.next_state,
                    probability=t.probability,
                )
                for t in machine.transitions()
            ],
        )


def parse_machine(data: Any) -> EpsilonMachine:
    """
    Build a machine from an already-parsed mapping.

    Raises:
        MachineDefinitionError: If the mapping is malformed or the kernel invalid
    """
    try:
        definition = MachineDefinition.model_validate(data)
    except ValidationError as e:
        raise MachineDefinitionError(f"Invalid machine definition: {e}") from e
    return definition.to_machine()


def load_machine(path: str | Path) -> EpsilonMachine:
    """
    Load a machine-definition file.

    Raises:
        MachineDefinitionError: If the file is missing, not YAML, or invalid
    """
    path = Path(path)
    if not path.exists():
        raise MachineDefinitionError(f"Machine file not found: {path}")
    try:
        data = yaml.safe_load(path.read_text())
    except yaml.YAMLError as e:
        raise MachineDefinitionError(f"Cannot parse {path}: {e}") from e
    machine = parse_machine(data)
    logger.info(f"Loaded {machine!r} from {path}")
    return machine


def dump_machine(machine: EpsilonMachine, path: str | Path) -> Path:
    """Write ``machine`` as a machine-definition file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    definition = MachineDefinition.from_machine(machine)
    payload = definition.model_dump(by_alias=True)
    path.write_text(yaml.safe_dump(payload, sort_keys=False))
    logger.info(f"Wrote {machine!r} to {path}")
    return path
