"""
Seshadri constants of nef line bundles on Bott towers.
"""

from src.seshadri.engine import (
    GlobalSeshadri,
    SeshadriResult,
    StratumValue,
    check_hypotheses,
    seshadri_at,
    seshadri_by_recursion,
    seshadri_curve,
    seshadri_inf,
    seshadri_sup,
    strata_report,
    stratum_point,
)

__all__ = [
    "GlobalSeshadri",
    "SeshadriResult",
    "StratumValue",
    "check_hypotheses",
    "seshadri_at",
    "seshadri_by_recursion",
    "seshadri_curve",
    "seshadri_inf",
    "seshadri_sup",
    "strata_report",
    "stratum_point",
]
