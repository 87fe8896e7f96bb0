"""
Fixed-Point Oracle Module

Independent check of the Seshadri engine. At a torus-fixed point x_sigma the
Seshadri constant of a nef line bundle is the minimum of L . V(tau) over the
n invariant curves through x_sigma (the walls tau of sigma); those curves are
smooth, so every multiplicity is 1. The intersection numbers come from wall
relations, not from the closed form, so agreement is a genuine cross-check.

Only fixed points are checked: elsewhere invariant curves need not pass
through the point and would only give a bound.
"""

from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np
import structlog
from pydantic import BaseModel

from src.curve.intersection import invariant_curve_class, pair, wall_relation, walls_through
from src.divisor.picard import DivisorClass
from src.point.cox import fixed_point_of_cone
from src.seshadri.engine import check_hypotheses, seshadri_at
from src.tower.fan import BottNumbers, BottTower, MaximalCone, Wall, build_tower
from src.utils.errors import BoundViolated, DiscrepancyFound

logger = structlog.get_logger(__name__)


class WallPairing(BaseModel):
    """L . V(tau) for one wall, with the data it was computed from."""
    slot: int
    rays: List[int]
    relation: List[Tuple[int, int]]
    curve_class: List[int]
    pairing: int


class FixedPointCheck(BaseModel):
    cone: str
    point: str
    gamma_index: int
    oracle_value: int
    formula_value: int
    walls: List[WallPairing]

    @property
    def agrees(self) -> bool:
        return self.oracle_value == self.formula_value


class CrossCheckReport(BaseModel):
    bott_numbers: List[List[int]]
    bundle: List[int]
    checks: List[FixedPointCheck]
    discrepancies: List[FixedPointCheck]


class BoundCheckReport(BaseModel):
    bott_numbers: List[List[int]]
    bundle: List[int]
    minimum: int
    walls_checked: int
    violations: List[WallPairing]


class CampaignReport(BaseModel):
    seed: int
    trials: int
    height: Optional[int]
    fixed_points_checked: int
    walls_checked: int
    discrepancies: List[CrossCheckReport]
    bound_violations: List[BoundCheckReport]

    @property
    def discrepancy_count(self) -> int:
        return sum(len(report.discrepancies) for report in self.discrepancies)

    @property
    def violation_count(self) -> int:
        return sum(len(report.violations) for report in self.bound_violations)


def _wall_pairing(tower: BottTower, divisor: DivisorClass, wall: Wall) -> WallPairing:
    relation = wall_relation(tower, wall)
    curve = invariant_curve_class(tower, wall)
    return WallPairing(
        slot=wall.slot,
        rays=wall.sorted_rays(),
        relation=list(relation.coefficients),
        curve_class=list(curve.coeffs),
        pairing=pair(divisor, curve),
    )


def fixed_point_seshadri(tower: BottTower, divisor: DivisorClass, cone: MaximalCone) -> int:
    """
    Seshadri constant at the fixed point of ``cone`` from invariant curves.

    Raises:
        NonPositiveBottNumbers, NotNef: outside the supported regime
    """
    check_hypotheses(tower, divisor)
    return min(pair(divisor, invariant_curve_class(tower, wall))
               for wall in walls_through(tower, cone))


def _check_cone(tower: BottTower, divisor: DivisorClass, cone: MaximalCone) -> FixedPointCheck:
    pairings = [_wall_pairing(tower, divisor, wall) for wall in walls_through(tower, cone)]
    point = fixed_point_of_cone(tower, cone)
    formula = seshadri_at(tower, divisor, point)
    return FixedPointCheck(
        cone=cone.label,
        point=point.format(),
        gamma_index=formula.gamma_index,
        oracle_value=min(p.pairing for p in pairings),
        formula_value=formula.value,
        walls=pairings,
    )


def cross_check_fixed_points(tower: BottTower, divisor: DivisorClass,
                             strict: bool = True) -> CrossCheckReport:
    """
    Compare oracle and formula at all 2^n fixed points.

    Args:
        tower: Tower with positive Bott numbers
        divisor: Nef class
        strict: Raise on the first disagreement instead of collecting

    Raises:
        DiscrepancyFound: in strict mode, carrying the offending cone
    """
    check_hypotheses(tower, divisor)
    checks = []
    discrepancies = []
    for cone in tower.maximal_cones:
        check = _check_cone(tower, divisor, cone)
        checks.append(check)
        if check.agrees:
            continue
        logger.warning("Fixed-point discrepancy",
                       cone=check.cone,
                       oracle=check.oracle_value,
                       formula=check.formula_value)
        if strict:
            raise DiscrepancyFound(
                f"oracle {check.oracle_value} != formula {check.formula_value} at cone {check.cone}",
                cone=cone,
                check=check.model_dump(),
            )
        discrepancies.append(check)

    return CrossCheckReport(
        bott_numbers=[list(row) for row in tower.numbers.rows],
        bundle=list(divisor.coeffs),
        checks=checks,
        discrepancies=discrepancies,
    )


def nef_lower_bound_check(tower: BottTower, divisor: DivisorClass,
                          strict: bool = True) -> BoundCheckReport:
    """
    Verify L . V(tau) >= min_i a_i over every wall of the fan.

    Raises:
        BoundViolated: in strict mode, carrying the offending wall
    """
    check_hypotheses(tower, divisor)
    minimum = min(divisor.coeffs)
    violations = []
    walls = tower.walls
    for wall in walls:
        pairing = _wall_pairing(tower, divisor, wall)
        if pairing.pairing >= minimum:
            continue
        logger.warning("Nef wall bound violated", rays=pairing.rays, pairing=pairing.pairing,
                       minimum=minimum)
        if strict:
            raise BoundViolated(
                f"L . V(tau) = {pairing.pairing} < {minimum}",
                wall=wall,
                pairing=pairing.model_dump(),
            )
        violations.append(pairing)

    return BoundCheckReport(
        bott_numbers=[list(row) for row in tower.numbers.rows],
        bundle=list(divisor.coeffs),
        minimum=minimum,
        walls_checked=len(walls),
        violations=violations,
    )


def random_instances(trials: int, seed: int, height: Optional[int] = None,
                     max_height: int = 5, max_bott_number: int = 9,
                     max_coefficient: int = 99) -> List[Tuple[BottNumbers, DivisorClass]]:
    """
    Seeded random (positive Bott numbers, nef bundle) pairs.

    Heights are ``height`` when given, otherwise uniform in 1..max_height.
    """
    rng = np.random.default_rng(seed)
    instances = []
    for _ in range(trials):
        n = height if height is not None else int(rng.integers(1, max_height + 1))
        rows = tuple(
            tuple(int(c) for c in rng.integers(1, max_bott_number + 1, size=n - k))
            for k in range(1, n)
        )
        bundle = DivisorClass(tuple(int(a) for a in rng.integers(0, max_coefficient + 1, size=n)))
        instances.append((BottNumbers(n, rows), bundle))
    return instances


def _verify_instance(instance: Tuple[BottNumbers, DivisorClass]) -> Tuple[CrossCheckReport, BoundCheckReport]:
    numbers, bundle = instance
    tower = build_tower(numbers)
    return (
        cross_check_fixed_points(tower, bundle, strict=False),
        nef_lower_bound_check(tower, bundle, strict=False),
    )


def run_campaign(trials: int = 100, seed: int = 7, height: Optional[int] = None,
                 max_height: int = 5, max_bott_number: int = 9, max_coefficient: int = 99,
                 workers: int = 1) -> CampaignReport:
    """
    Randomized oracle campaign over fixed points and walls.

    Args:
        trials: Number of random instances
        seed: Seed recorded in the report
        height: Fixed tower height; None draws heights from 1..max_height
        max_height: Upper bound for drawn heights
        max_bott_number: Bott numbers are drawn from 1..max_bott_number
        max_coefficient: Bundle coefficients are drawn from 0..max_coefficient
        workers: Thread-pool size; results keep instance order

    Returns:
        Aggregated CampaignReport
    """
    logger.info("Starting oracle campaign", trials=trials, seed=seed, height=height,
                workers=workers)
    instances = random_instances(trials, seed, height, max_height, max_bott_number,
                                 max_coefficient)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_instance, instances))
    else:
        results = [_verify_instance(instance) for instance in instances]

    report = CampaignReport(
        seed=seed,
        trials=trials,
        height=height,
        fixed_points_checked=sum(len(cross.checks) for cross, _ in results),
        walls_checked=sum(bound.walls_checked for _, bound in results),
        discrepancies=[cross for cross, _ in results if cross.discrepancies],
        bound_violations=[bound for _, bound in results if bound.violations],
    )
    logger.info("Oracle campaign finished",
                fixed_points=report.fixed_points_checked,
                walls=report.walls_checked,
                discrepancies=report.discrepancy_count,
                violations=report.violation_count)
    return report
