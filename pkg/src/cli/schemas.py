"""
Output documents emitted by the CLI.

Every command builds one of these models; ``--json`` prints
``model_dump_json(indent=2)`` and the text renderers read the same fields, so
both views always agree. Parsing the JSON back with ``model_validate_json``
reproduces the model.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel

from src.curve.intersection import gamma_class
from src.divisor.picard import DivisorClass, class_of_fiber_divisor, is_ample, is_nef
from src.point.cox import CoxPoint, canonicalize, gamma_index, in_gamma, points_on_divisor
from src.seshadri.engine import GlobalSeshadri, SeshadriResult, StratumValue
from src.tower.fan import BottTower


class RayOutput(BaseModel):
    index: int
    vector: List[int]


class TowerInfoOutput(BaseModel):
    n: int
    bott_numbers: List[List[int]]
    positive_bott_numbers: bool
    rays: List[RayOutput]
    maximal_cones: int
    walls: int
    fiber_class: Optional[List[int]] = None


class NefOutput(BaseModel):
    bott_numbers: List[List[int]]
    bundle: List[int]
    nef: bool
    ample: bool


class SeshadriOutput(BaseModel):
    bott_numbers: List[List[int]]
    bundle: List[int]
    point: str
    value: int
    gamma_index: int
    witness_index: int
    seshadri_curve: List[int]
    within_hypothesis: bool


class StratumRow(BaseModel):
    index: int
    value: int
    witness_index: int


class StrataOutput(BaseModel):
    bott_numbers: List[List[int]]
    bundle: List[int]
    strata: List[StratumRow]
    within_hypothesis: bool

    @property
    def values(self) -> List[int]:
        return [row.value for row in self.strata]


class GlobalOutput(BaseModel):
    kind: str
    bott_numbers: List[List[int]]
    bundle: List[int]
    value: int
    witness_index: int
    point: str
    within_hypothesis: bool


class PointOutput(BaseModel):
    bott_numbers: List[List[int]]
    point: str
    gamma_index: int
    gamma_membership: List[Tuple[int, bool]]
    divisors: List[str]
    canonical: Optional[str] = None


def _rows(tower: BottTower) -> List[List[int]]:
    return [list(row) for row in tower.numbers.rows]


def tower_info(tower: BottTower) -> TowerInfoOutput:
    fiber = class_of_fiber_divisor(tower).coeffs if tower.n >= 2 else None
    return TowerInfoOutput(
        n=tower.n,
        bott_numbers=_rows(tower),
        positive_bott_numbers=tower.numbers.all_positive(),
        rays=[RayOutput(index=ray.index, vector=list(ray.vector)) for ray in tower.rays],
        maximal_cones=tower.cone_count,
        walls=tower.wall_count,
        fiber_class=list(fiber) if fiber is not None else None,
    )


def nef_output(tower: BottTower, divisor: DivisorClass) -> NefOutput:
    return NefOutput(
        bott_numbers=_rows(tower),
        bundle=list(divisor.coeffs),
        nef=is_nef(tower, divisor),
        ample=is_ample(tower, divisor),
    )


def seshadri_output(tower: BottTower, divisor: DivisorClass, point: CoxPoint,
                    result: SeshadriResult) -> SeshadriOutput:
    return SeshadriOutput(
        bott_numbers=_rows(tower),
        bundle=list(divisor.coeffs),
        point=point.format(),
        value=result.value,
        gamma_index=result.gamma_index,
        witness_index=result.witness_index,
        seshadri_curve=list(gamma_class(tower, result.witness_index).coeffs),
        within_hypothesis=result.within_hypothesis,
    )


def strata_output(tower: BottTower, divisor: DivisorClass, strata: List[StratumValue],
                  within_hypothesis: bool) -> StrataOutput:
    return StrataOutput(
        bott_numbers=_rows(tower),
        bundle=list(divisor.coeffs),
        strata=[StratumRow(index=s.index, value=s.value, witness_index=s.witness_index)
                for s in strata],
        within_hypothesis=within_hypothesis,
    )


def global_output(kind: str, tower: BottTower, divisor: DivisorClass,
                  result: GlobalSeshadri) -> GlobalOutput:
    return GlobalOutput(
        kind=kind,
        bott_numbers=_rows(tower),
        bundle=list(divisor.coeffs),
        value=result.value,
        witness_index=result.witness_index,
        point=result.point.format(),
        within_hypothesis=result.within_hypothesis,
    )


def point_output(tower: BottTower, point: CoxPoint) -> PointOutput:
    return PointOutput(
        bott_numbers=_rows(tower),
        point=point.format(),
        gamma_index=gamma_index(tower, point),
        gamma_membership=[(i, in_gamma(tower, point, i)) for i in range(1, tower.n + 1)],
        divisors=points_on_divisor(tower, point),
        canonical=canonicalize(tower, point).format() if point.has_values else None,
    )
