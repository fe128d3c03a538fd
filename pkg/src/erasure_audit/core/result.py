"""
Report containers.

Every CLI subcommand produces one of these; ``to_dict`` gives the flat,
JSON-ready form the report writer consumes.
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any


@dataclass(frozen=True)
class BoundReport:
    """
    Erased-information bound for one family index.

    Attributes:
        n: Family index (2^n states, 2^n choices)
        erased_bits: Exact erased information I(n)
        lower_bound_bits: The bound n it strictly exceeds
        margin_bits: erased_bits - n
        heat_joules: Landauer heat for erased_bits at the temperature
        ceiling_joules: kT ln 2, the most a qubit erasure may cost
        ceiling_ratio: heat_joules / ceiling_joules
        temperature_kelvin: Bath temperature
    """

    n: int
    erased_bits: float
    lower_bound_bits: float
    margin_bits: float
    heat_joules: float
    ceiling_joules: float
    ceiling_ratio: float
    temperature_kelvin: float

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class MachineReport:
    """Stationary analysis of one machine."""

    name: str
    n_states: int
    n_choices: int
    n_outcomes: int
    n_transitions: int
    unifilar: bool
    statistical_complexity_bits: float
    erased_bits: float
    stationary: dict[str, float]
    expected_erased_bits: float | None = None

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class SimulationReport:
    """Monte Carlo run of a dyadic machine against its analytic values."""

    n: int
    steps: int
    seed: int
    analytic_erased_bits: float
    empirical_erased_bits: float
    standard_error_bits: float
    excluded_states: int
    max_frequency_deviation_se: float

    @property
    def within_three_sigma(self) -> bool:
        tolerance = max(3.0 * self.standard_error_bits, 1e-12)
        return abs(self.empirical_erased_bits - self.analytic_erased_bits) <= tolerance

    def to_dict(self) -> dict[str, Any]:
        return {**asdict(self), "within_three_sigma": self.within_three_sigma}


@dataclass
class TrialReport:
    """
    One seeded run of a box protocol.

    Attributes:
        protocol: Registered protocol name
        trial: Trial index within the audit
        seed: Seed derived for this trial
        policy: Accounting policy value
        metrics: Protocol-specific observations (outcomes, iterations, ...)
        totals: Ledger column sums in kT / bits
        entries: Full ledger
        violation_flag: Net positive work extracted over a closed cycle
    """

    protocol: str
    trial: int
    seed: int
    policy: str
    metrics: dict[str, Any] = field(default_factory=dict)
    totals: dict[str, float] = field(default_factory=dict)
    entries: list[dict[str, Any]] = field(default_factory=list)
    violation_flag: bool = False

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class AuditReport:
    """
    Aggregate over the trials of one box protocol.

    Example:
        >>> audit = AuditReport(protocol="reset", policy="landauer_honest", seed=0)
        >>> audit.add_trial(TrialReport("reset", 0, 1, "landauer_honest",
        ...     totals={"work_on_system": 0.5, "work_extracted": 0.0,
        ...             "heat_dissipated": 0.5, "record_bits_created": 0.0,
        ...             "record_bits_erased": 0.0, "net_work_extracted": -0.5,
        ...             "outstanding_record_bits": 0.0}))
        >>> audit.net_work_extracted_kt
        -0.5
    """

    protocol: str
    policy: str
    seed: int
    trials: list[TrialReport] = field(default_factory=list)

    def add_trial(self, trial: TrialReport) -> None:
        self.trials.append(trial)

    def _column(self, name: str) -> float:
        return math.fsum(t.totals.get(name, 0.0) for t in self.trials)

    @property
    def net_work_extracted_kt(self) -> float:
        return self._column("net_work_extracted")

    @property
    def heat_kt(self) -> float:
        return self._column("heat_dissipated")

    @property
    def record_bits(self) -> float:
        return self._column("record_bits_created")

    @property
    def violation_flag(self) -> bool:
        return any(t.violation_flag for t in self.trials)

    @property
    def violations(self) -> int:
        return sum(t.violation_flag for t in self.trials)

    def metric_means(self) -> dict[str, float]:
        """Mean of every numeric metric shared by all trials."""
        if not self.trials:
            return {}
        keys = [
            k
            for k, v in self.trials[0].metrics.items()
            if isinstance(v, (int, float)) and not isinstance(v, bool)
        ]
        return {
            k: math.fsum(float(t.metrics[k]) for t in self.trials) / len(self.trials)
            for k in keys
            if all(k in t.metrics for t in self.trials)
        }

    def summary(self) -> dict[str, Any]:
        return {
            "protocol": self.protocol,
            "policy": self.policy,
            "seed": self.seed,
            "trials": len(self.trials),
            "net_work_extracted_kT": self.net_work_extracted_kt,
            "heat_kT": self.heat_kt,
            "record_bits": self.record_bits,
            "violations": self.violations,
            "violation_flag": self.violation_flag,
            "metric_means": self.metric_means(),
        }

    def to_dict(self) -> dict[str, Any]:
        return {**self.summary(), "per_trial": [t.to_dict() for t in self.trials]}

    def __repr__(self) -> str:
        status = "VIOLATION" if self.violation_flag else "ok"
        return (
            f"AuditReport({self.protocol}/{self.policy}, {len(self.trials)} trials, "
            f"net {self.net_work_extracted_kt:.6g} kT, {status})"
        )
