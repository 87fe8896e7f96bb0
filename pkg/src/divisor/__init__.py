"""
Picard-lattice arithmetic on Bott towers.
"""

from src.divisor.picard import (
    DivisorClass,
    RayDivisor,
    class_of_fiber_divisor,
    is_ample,
    is_nef,
    prime_divisor,
    principal_divisor,
    reduce_to_basis,
    require_positive_bott_numbers,
    restrict_to_stage,
)

__all__ = [
    "DivisorClass",
    "RayDivisor",
    "class_of_fiber_divisor",
    "is_ample",
    "is_nef",
    "prime_divisor",
    "principal_divisor",
    "reduce_to_basis",
    "require_positive_bott_numbers",
    "restrict_to_stage",
]
