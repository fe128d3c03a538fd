"""Utils module."""

from erasure_audit.utils.entropy import (
    compensated_sum,
    conditional_entropies,
    shannon_entropy,
)
from erasure_audit.utils.seeding import derive_seed, make_rng, splitmix64
from erasure_audit.utils.trig import dyadic_cos2

__all__ = [
    # Entropy
    "compensated_sum",
    "shannon_entropy",
    "conditional_entropies",
    # Seeds
    "splitmix64",
    "derive_seed",
    "make_rng",
    # Trigonometry
    "dyadic_cos2",
]
