"""
Erased-information bound for the dyadic measurement family.

For family index n the causal-state weights are cos^2(pi j / 2^(n+1)) / 2^n,
j = 0 .. 2^(n+1) - 1, and the erased information per measurement is their
Shannon entropy. The identity sum_j cos^2(pi j / 2^(n+1)) = 2^n makes the
weights a distribution, and every weight is at most 1/2^n, hence
I_erased(n) > n for n >= 1 (equality at n = 0).
"""

import logging
import math
from collections.abc import Iterable

import numpy as np
from numpy.typing import NDArray
from scipy.constants import Boltzmann

from erasure_audit.core.exceptions import DomainError
from erasure_audit.core.quantities import BitQuantity, HeatQuantity, ProbabilityVector
from erasure_audit.core.result import BoundReport
from erasure_audit.utils.entropy import compensated_sum, shannon_entropy
from erasure_audit.utils.trig import dyadic_cos2

logger = logging.getLogger(__name__)

MAX_FAMILY_INDEX = 24
LN2 = math.log(2.0)


def _check_family_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DomainError("n", n, "an integer")
    if not 0 <= n <= MAX_FAMILY_INDEX:
        raise DomainError("n", n, f"0 <= n <= {MAX_FAMILY_INDEX}")


def _check_temperature(temperature: float) -> None:
    if not (math.isfinite(temperature) and temperature > 0):
        raise DomainError("temperature", temperature, "> 0 kelvin")


def cos2_weights(n: int) -> NDArray[np.float64]:
    """
    cos^2(pi j / 2^(n+1)) for j = 0 .. 2^(n+1) - 1.

    Angles are reduced with exact integer arithmetic before the single
    trigonometric call, so the symmetry c_j = c_{N-j} holds exactly and the
    orthogonal weight c_{2^n} is exactly zero.

    Args:
        n: Family index, 0 <= n <= 24

    Returns:
        Array of 2^(n+1) weights summing to 2^n

    Raises:
        DomainError: If n is out of range
    """
    _check_family_index(n)
    size = 1 << (n + 1)
    return dyadic_cos2(np.arange(size, dtype=np.int64), size)


def weight_sum(n: int) -> float:
    """Compensated sum of :func:`cos2_weights`; equals 2^n."""
    return compensated_sum(cos2_weights(n).tolist())


def causal_state_distribution(n: int) -> ProbabilityVector:
    """
    Causal-state weights cos^2(pi j / 2^(n+1)) / 2^n, indexed by j.

    Raises:
        DomainError: If n is out of range
    """
    weights = cos2_weights(n) / float(1 << n)
    return ProbabilityVector(range(weights.size), weights)


def erased_information(n: int) -> BitQuantity:
    """
    Erased information I_erased(n) in bits.

    Example:
        >>> erased_information(1).value
        1.5
    """
    bits = shannon_entropy(cos2_weights(n) / float(1 << n))
    logger.debug(f"I_erased({n}) = {bits:.12g} bits")
    return BitQuantity(bits)


def bits_to_kt(bits: float) -> float:
    """Bits to kT units (factor ln 2)."""
    return bits * LN2


def kt_to_bits(kt: float) -> float:
    """kT units to bits."""
    return kt / LN2


def landauer_heat(bits: BitQuantity | float, temperature: float) -> HeatQuantity:
    """
    Minimum heat for erasing ``bits`` at ``temperature``: bits * k T ln 2.

    Raises:
        DomainError: On nonpositive temperature or negative bits
    """
    _check_temperature(temperature)
    amount = float(bits)
    if not (math.isfinite(amount) and amount >= 0):
        raise DomainError("bits", amount, "finite and >= 0")
    return HeatQuantity(amount * Boltzmann * temperature * LN2, temperature)


def qubit_landauer_ceiling(temperature: float) -> HeatQuantity:
    """
    k T ln 2, the per-measurement ceiling of the von Neumann-entropy bound.

    A qubit's entropy lies in [0, 1] bit, so outside the finite-memory,
    random-choice, Landauer setting no lower bound on heat per measurement
    can exceed this value. It is a comparison constant: the type I machines
    of this package are bounded below by :func:`erased_information` instead.
    """
    return landauer_heat(1.0, temperature)


def bound_report(n: int, temperature: float) -> BoundReport:
    """All bound quantities for one family index."""
    erased = erased_information(n)
    heat = landauer_heat(erased, temperature)
    ceiling = qubit_landauer_ceiling(temperature)
    return BoundReport(
        n=n,
        erased_bits=erased.value,
        lower_bound_bits=float(n),
        margin_bits=erased.value - n,
        heat_joules=heat.value,
        ceiling_joules=ceiling.value,
        ceiling_ratio=heat.value / ceiling.value,
        temperature_kelvin=temperature,
    )


def erasure_table(n_values: Iterable[int], temperature: float) -> list[BoundReport]:
    """
    One :class:`BoundReport` per family index, e.g. to tabulate growth in n.
    """
    rows = [bound_report(n, temperature) for n in n_values]
    logger.info(f"Tabulated erased information for {len(rows)} family indices")
    return rows
