"""Erased-information bound exports."""

from erasure_audit.bounds.erasure import (
    LN2,
    MAX_FAMILY_INDEX,
    bits_to_kt,
    bound_report,
    causal_state_distribution,
    cos2_weights,
    erased_information,
    erasure_table,
    kt_to_bits,
    landauer_heat,
    qubit_landauer_ceiling,
    weight_sum,
)

__all__ = [
    "LN2",
    "MAX_FAMILY_INDEX",
    "cos2_weights",
    "weight_sum",
    "causal_state_distribution",
    "erased_information",
    "bits_to_kt",
    "kt_to_bits",
    "landauer_heat",
    "qubit_landauer_ceiling",
    "bound_report",
    "erasure_table",
]
