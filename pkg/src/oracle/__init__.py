"""
Independent verification of the Seshadri engine at torus-fixed points.
"""

from src.oracle.verifier import (
    BoundCheckReport,
    CampaignReport,
    CrossCheckReport,
    FixedPointCheck,
    WallPairing,
    cross_check_fixed_points,
    fixed_point_seshadri,
    nef_lower_bound_check,
    random_instances,
    run_campaign,
)

__all__ = [
    "BoundCheckReport",
    "CampaignReport",
    "CrossCheckReport",
    "FixedPointCheck",
    "WallPairing",
    "cross_check_fixed_points",
    "fixed_point_seshadri",
    "nef_lower_bound_check",
    "random_instances",
    "run_campaign",
]
