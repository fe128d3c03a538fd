"""
Deterministic seed derivation.

Per-trial seeds are derived from the master seed with the SplitMix64 mixing
function, so a trial's stream does not depend on how trials are scheduled.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def splitmix64(value: int) -> int:
    """One SplitMix64 finalization round on a 64-bit integer."""
    z = (value + GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(master: int, index: int) -> int:
    """
    Seed for trial ``index`` under ``master``.

    Example:
        >>> derive_seed(0, 0) == derive_seed(0, 0)
        True
    """
    return splitmix64((master & MASK64) ^ splitmix64(index & MASK64))


def make_rng(seed: int) -> np.random.Generator:
    """numpy Generator seeded from a 64-bit integer."""
    return np.random.default_rng(seed & MASK64)
