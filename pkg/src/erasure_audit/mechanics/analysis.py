"""
Stationary analysis of epsilon-machines.

The causal state before a measurement, S_{t-1}, and after it, S_t, are
random variables under the stationary distribution. Their entropies give:

- statistical complexity H(S), the memory the machine stores;
- erased information sum_j P(S_t=s_j) H(S_{t-1} | S_t=s_j), the part of the
  previous state that the step overwrites and that Landauer's principle
  charges at kT ln 2 per bit.
"""

import logging
from collections.abc import Hashable
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from erasure_audit.config import get_settings
from erasure_audit.core.exceptions import ConvergenceError, StructuralError
from erasure_audit.core.quantities import BitQuantity, ProbabilityVector
from erasure_audit.mechanics.machine import EpsilonMachine
from erasure_audit.utils.entropy import conditional_entropies, shannon_entropy

logger = logging.getLogger(__name__)


def transition_matrix(machine: EpsilonMachine) -> NDArray[np.float64]:
    """Choice-marginalized state chain of ``machine``."""
    return machine.transition_matrix


def is_irreducible(machine: EpsilonMachine) -> bool:
    """Whether every state reaches every other along nonzero transitions."""
    graph = csr_matrix(machine.transition_matrix > 0)
    n_components, _ = connected_components(graph, directed=True, connection="strong")
    return bool(n_components == 1)


@lru_cache(maxsize=32)
def _solve_stationary(
    machine: EpsilonMachine,
    tolerance: float,
    max_iterations: int,
    damping: float,
) -> NDArray[np.float64]:
    if not is_irreducible(machine):
        raise StructuralError(
            f"{machine!r} is reducible: its state chain has more than one closed class"
        )

    matrix = machine.transition_matrix
    pi = np.full(machine.n_states, 1.0 / machine.n_states)
    residual = float("inf")
    for iteration in range(max_iterations + 1):
        flow = pi @ matrix
        residual = float(np.abs(flow - pi).sum())
        if residual < tolerance:
            logger.debug(f"Stationary distribution after {iteration} iterations")
            pi.setflags(write=False)
            return pi
        # Lazy step: converges on periodic chains too
        pi = (1.0 - damping) * pi + damping * flow
        pi /= pi.sum()

    raise ConvergenceError("stationary", max_iterations, residual)


def stationary(
    machine: EpsilonMachine,
    *,
    tolerance: float | None = None,
    max_iterations: int | None = None,
    damping: float | None = None,
) -> ProbabilityVector:
    """
    Stationary distribution of the choice-marginalized chain.

    Damped power iteration from the uniform vector; defaults come from
    :class:`~erasure_audit.config.MachineSettings`.

    Raises:
        StructuralError: If the chain is reducible
        ConvergenceError: If the residual stays above tolerance
    """
    settings = get_settings().machine
    pi = _solve_stationary(
        machine,
        settings.stationary_tolerance if tolerance is None else tolerance,
        settings.max_iterations if max_iterations is None else max_iterations,
        settings.damping if damping is None else damping,
    )
    return ProbabilityVector(machine.states, pi)


def stationarity_residual(machine: EpsilonMachine, pi: ProbabilityVector) -> float:
    """L1 norm of pi P - pi."""
    return float(np.abs(pi.entries @ machine.transition_matrix - pi.entries).sum())


def statistical_complexity(machine: EpsilonMachine) -> BitQuantity:
    """H(S) of the stationary causal-state distribution, in bits."""
    return BitQuantity(shannon_entropy(stationary(machine).entries))


def _stationary_flow(machine: EpsilonMachine) -> NDArray[np.float64]:
    """Joint table J[i, j] = pi_i P(i -> j)."""
    pi = stationary(machine).entries
    return pi[:, None] * machine.transition_matrix


def reverse_kernel(machine: EpsilonMachine) -> dict[Hashable, ProbabilityVector]:
    """
    Bayes-reversed kernel P(S_{t-1}=s_i | S_t=s_j) for every s_j with mass.

    States with zero stationary mass have no conditional and are left out of
    the mapping.
    """
    flow = _stationary_flow(machine)
    inflow = flow.sum(axis=0)
    rows: dict[Hashable, ProbabilityVector] = {}
    for j in np.flatnonzero(inflow > 0):
        rows[machine.states[j]] = ProbabilityVector(machine.states, flow[:, j] / inflow[j])
    return rows


def mean_erased_information(machine: EpsilonMachine) -> BitQuantity:
    """
    Average information erased per step, sum_j pi_j H(S_{t-1} | S_t=s_j).

    Example:
        >>> from erasure_audit.qubit import build_dyadic_machine
        >>> round(mean_erased_information(build_dyadic_machine(1)).value, 12)
        1.5
    """
    entropies, inflow = conditional_entropies(_stationary_flow(machine))
    bits = float(np.dot(inflow, entropies))
    logger.debug(f"Erased information of {machine!r}: {bits:.12g} bits")
    return BitQuantity(max(bits, 0.0))
