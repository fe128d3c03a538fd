"""
Exact-argument cos^2 at dyadic angles.

Arguments are carried as integer numerators over an integer period so that
angle reduction is exact; the single floating-point cosine is applied last.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray


def dyadic_cos2(numerator: ArrayLike, size: int) -> NDArray[np.float64]:
    """
    cos^2(pi * numerator / size), elementwise.

    The difference is folded onto [0, size/2] (cos^2 has period pi and is
    even). Values below 1/2 are computed as the complement of the orthogonal
    angle, so cos^2(x) + cos^2(x + pi/2) == 1 holds exactly in floating point
    and orthogonal pairs give exactly 0 and 1.

    Args:
        numerator: Integer numerator(s), any sign
        size: Positive integer period (a power of two for dyadic angles)
    """
    d = np.mod(np.asarray(numerator, dtype=np.int64), size)
    folded = np.minimum(d, size - d)
    # folded > size/4 means cos^2 < 1/2: use the orthogonal partner
    small = 4 * folded > size
    partner = np.where(small, size - 2 * folded, 2 * folded)
    large_value = (1.0 + np.cos(np.pi * partner / size)) / 2.0
    return np.where(small, 1.0 - large_value, large_value)
