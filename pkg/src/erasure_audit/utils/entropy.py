"""
Shannon entropy helpers.

All entropies are in bits. Terms with zero probability contribute zero
(0 log 0 := 0).
"""

import math
from collections.abc import Iterable

import numpy as np
from numpy.typing import ArrayLike


def compensated_sum(values: Iterable[float]) -> float:
    """Exactly rounded floating-point sum."""
    return math.fsum(values)


def shannon_entropy(probabilities: ArrayLike) -> float:
    """
    Shannon entropy of a distribution in bits.

    Args:
        probabilities: Nonnegative weights summing to 1

    Returns:
        -sum p log2 p over the strictly positive entries
    """
    p = np.asarray(probabilities, dtype=np.float64).ravel()
    p = p[p > 0]
    if p.size == 0:
        return 0.0
    return max(0.0, -compensated_sum((p * np.log2(p)).tolist()))


def conditional_entropies(joint: ArrayLike) -> tuple[np.ndarray, np.ndarray]:
    """
    Column-conditional entropies of a joint table.

    Args:
        joint: Nonnegative table with rows indexing X and columns indexing Y

    Returns:
        (H(X | Y=y) per column, column marginal). Columns with zero mass
        get entropy 0.
    """
    table = np.asarray(joint, dtype=np.float64)
    marginal = table.sum(axis=0)
    entropies = np.zeros(table.shape[1])
    for column in np.flatnonzero(marginal > 0):
        entropies[column] = shannon_entropy(table[:, column] / marginal[column])
    return entropies, marginal
