"""
Plain-text views of the CLI output documents.
"""

from typing import List

from src.cli.schemas import (
    GlobalOutput,
    NefOutput,
    PointOutput,
    SeshadriOutput,
    StrataOutput,
    TowerInfoOutput,
)
from src.oracle.verifier import CampaignReport

RULE = "=" * 50


def _vector(values: List[int]) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _hypothesis_note(within: bool) -> List[str]:
    if within:
        return []
    return ["", "note: evaluated formally outside the positive-Bott-number, nef regime"]


def render_tower_info(info: TowerInfoOutput) -> str:
    lines = [
        f"Bott tower of height {info.n}",
        RULE,
        f"Bott numbers: {info.bott_numbers}",
        f"Positive Bott numbers: {'yes' if info.positive_bott_numbers else 'no'}",
        f"Maximal cones: {info.maximal_cones}",
        f"Walls: {info.walls}",
    ]
    if info.fiber_class is not None:
        lines.append(f"Fibre divisor class: {_vector(info.fiber_class)}")
    lines.append("")
    lines.append("Rays:")
    for ray in info.rays:
        lines.append(f"  v_{ray.index:<3} {_vector(ray.vector)}")
    return "\n".join(lines)


def render_nef(output: NefOutput) -> str:
    return "\n".join([
        f"L = {_vector(output.bundle)}",
        f"  nef:   {'yes' if output.nef else 'no'}",
        f"  ample: {'yes' if output.ample else 'no'}",
    ])


def render_seshadri(output: SeshadriOutput) -> str:
    lines = [
        f"L = {_vector(output.bundle)}  x = {output.point}",
        RULE,
        f"Seshadri constant: {output.value}",
        f"Gamma index: {output.gamma_index}",
        f"Seshadri curve: Gamma^({output.witness_index}) = {_vector(output.seshadri_curve)}",
    ]
    return "\n".join(lines + _hypothesis_note(output.within_hypothesis))


def render_strata(output: StrataOutput) -> str:
    lines = [
        f"L = {_vector(output.bundle)}",
        RULE,
        f"{'stratum':>8}  {'epsilon':>8}  {'curve':>8}",
    ]
    for row in output.strata:
        lines.append(f"{row.index:>8}  {row.value:>8}  {'Gamma^(' + str(row.witness_index) + ')':>8}")
    return "\n".join(lines + _hypothesis_note(output.within_hypothesis))


def render_global(output: GlobalOutput) -> str:
    title = "eps(L) (infimum over points)" if output.kind == "inf" else "eps(L, 1) (general point)"
    lines = [
        f"L = {_vector(output.bundle)}",
        RULE,
        f"{title}: {output.value}",
        f"Attained on stratum {output.witness_index}, e.g. at {output.point}",
    ]
    return "\n".join(lines + _hypothesis_note(output.within_hypothesis))


def render_point(output: PointOutput) -> str:
    lines = [
        f"x = {output.point}",
        RULE,
        f"Gamma index: {output.gamma_index}",
        "On Gamma^(i): " + ", ".join(f"{i}:{'yes' if member else 'no'}"
                                      for i, member in output.gamma_membership),
        "Invariant divisors through x: " + (", ".join(output.divisors) or "none"),
    ]
    if output.canonical is not None:
        lines.append(f"Canonical form: {output.canonical}")
    return "\n".join(lines)


def render_campaign(report: CampaignReport) -> str:
    height = report.height if report.height is not None else "random"
    lines = [
        "Fixed-point oracle campaign",
        RULE,
        f"Seed: {report.seed}",
        f"Trials: {report.trials}",
        f"Height: {height}",
        f"Fixed points checked: {report.fixed_points_checked}",
        f"Walls checked: {report.walls_checked}",
        "",
        f"{'✅' if report.discrepancy_count == 0 else '❌'} {report.discrepancy_count} discrepancies",
        f"{'✅' if report.violation_count == 0 else '❌'} {report.violation_count} bound violations",
    ]
    for cross in report.discrepancies:
        for check in cross.discrepancies:
            lines.append(
                f"  c={cross.bott_numbers} L={_vector(cross.bundle)} cone {check.cone}: "
                f"oracle {check.oracle_value} != formula {check.formula_value}"
            )
    for bound in report.bound_violations:
        for wall in bound.violations:
            lines.append(
                f"  c={bound.bott_numbers} L={_vector(bound.bundle)} wall {wall.rays}: "
                f"{wall.pairing} < {bound.minimum}"
            )
    return "\n".join(lines)
