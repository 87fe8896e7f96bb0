"""
Points in Cox homogeneous coordinates and the Gamma stratification.
"""

from src.point.cox import (
    CoordEntry,
    CoxPoint,
    Status,
    canonicalize,
    fixed_point_of_cone,
    gamma_index,
    in_gamma,
    points_on_divisor,
    project,
    same_orbit,
    torus_action,
    validate_point,
)

__all__ = [
    "CoordEntry",
    "CoxPoint",
    "Status",
    "canonicalize",
    "fixed_point_of_cone",
    "gamma_index",
    "in_gamma",
    "points_on_divisor",
    "project",
    "same_orbit",
    "torus_action",
    "validate_point",
]
