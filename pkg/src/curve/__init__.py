"""
Curve classes, intersection pairing and wall relations.
"""

from src.curve.intersection import (
    CurveClass,
    WallRelation,
    gamma_class,
    invariant_curve_class,
    mori_generators,
    pair,
    relation_residual,
    wall_relation,
    walls_through,
)

__all__ = [
    "CurveClass",
    "WallRelation",
    "gamma_class",
    "invariant_curve_class",
    "mori_generators",
    "pair",
    "relation_residual",
    "wall_relation",
    "walls_through",
]
