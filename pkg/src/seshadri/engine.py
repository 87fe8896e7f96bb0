"""
Seshadri Constant Engine

For a Bott tower with positive Bott numbers and a nef class
L = (a_1, ..., a_n), the Seshadri constant at a point x is

    eps(L, x) = min{ a_i : i >= i0(x) }

where i0(x) is the Gamma index of x (smallest i with z_j = 0 for all j > i).
The value is attained on the curve Gamma_n^(i) for the smallest such i
achieving the minimum.

``seshadri_by_recursion`` evaluates the fibre recursion literally
(restrict to X_n^(2), recurse, take min with a_1 on Gamma_n) and is kept as
an independent path for cross-checking the closed form.
"""

from dataclasses import dataclass
from typing import List

import structlog

from src.curve.intersection import CurveClass, gamma_class
from src.divisor.picard import DivisorClass, restrict_to_stage
from src.point.cox import CoordEntry, CoxPoint, gamma_index, in_gamma, project, validate_point
from src.tower.fan import BottTower, vertical_subtower
from src.utils.errors import LengthMismatch, NonPositiveBottNumbers, NotNef

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class SeshadriResult:
    """eps(L, x) with the Gamma curve realizing it and the stratum of x."""
    value: int
    witness_index: int
    gamma_index: int
    within_hypothesis: bool = True


@dataclass(frozen=True)
class StratumValue:
    """Seshadri constant on the stratum Gamma^(i) minus Gamma^(i-1)."""
    index: int
    value: int
    witness_index: int


@dataclass(frozen=True)
class GlobalSeshadri:
    """A global Seshadri value together with a point attaining it."""
    value: int
    witness_index: int
    point: CoxPoint
    within_hypothesis: bool = True


def check_hypotheses(tower: BottTower, divisor: DivisorClass, formal: bool = False) -> bool:
    """
    Verify positive Bott numbers and nefness.

    Args:
        tower: Ambient tower
        divisor: Line bundle class
        formal: Report failures instead of raising

    Returns:
        True when both hypotheses hold

    Raises:
        NonPositiveBottNumbers, NotNef: when a hypothesis fails and not formal
    """
    if divisor.n != tower.n:
        raise LengthMismatch("divisor class", tower.n, divisor.n)

    positive = tower.numbers.all_positive()
    nef = divisor.has_nonnegative_coeffs()
    if formal:
        if not (positive and nef):
            logger.info("Evaluating formally outside positive Bott numbers or nef bundles",
                        positive_bott_numbers=positive, nef=nef)
        return positive and nef

    if not positive:
        raise NonPositiveBottNumbers(
            "Seshadri formula requires positive Bott numbers",
            bott_numbers=[list(row) for row in tower.numbers.rows],
        )
    if not nef:
        raise NotNef("line bundle is not nef", bundle=list(divisor.coeffs))
    return True


def _suffix_min(coeffs: tuple, start: int) -> tuple:
    """(min of coeffs[start-1:], smallest 1-based index attaining it)."""
    tail = coeffs[start - 1:]
    value = min(tail)
    return value, start + tail.index(value)


def seshadri_at(tower: BottTower, divisor: DivisorClass, point: CoxPoint,
                formal: bool = False) -> SeshadriResult:
    """
    Seshadri constant of L at x.

    Args:
        tower: Tower with positive Bott numbers
        divisor: Nef class (a_1, ..., a_n)
        point: Query point; only its zero pattern is used
        formal: Evaluate the closed form even outside the hypotheses

    Returns:
        SeshadriResult with value min{a_i : i >= gamma_index(x)}
    """
    within = check_hypotheses(tower, divisor, formal)
    i0 = gamma_index(tower, point)
    value, witness = _suffix_min(divisor.coeffs, i0)
    return SeshadriResult(value=value, witness_index=witness, gamma_index=i0,
                          within_hypothesis=within)


def seshadri_curve(tower: BottTower, divisor: DivisorClass, point: CoxPoint) -> CurveClass:
    """Class of the Gamma curve that is a Seshadri curve for L at x."""
    result = seshadri_at(tower, divisor, point)
    return gamma_class(tower, result.witness_index)


def stratum_point(tower: BottTower, i: int) -> CoxPoint:
    """
    A point with Gamma index exactly i: z_i nonzero, z_l = 0 and w_l = 1 for
    l > i, every other coordinate nonzero.
    """
    pairs = []
    for l in range(1, tower.n + 1):
        if l > i:
            pairs.append((CoordEntry.zero(), CoordEntry.of(1)))
        else:
            pairs.append((CoordEntry.nonzero(), CoordEntry.nonzero()))
    return CoxPoint(tuple(pairs))


def seshadri_inf(tower: BottTower, divisor: DivisorClass, formal: bool = False) -> GlobalSeshadri:
    """eps(L) = min_i a_i, attained on the stratum of the first minimizing index."""
    within = check_hypotheses(tower, divisor, formal)
    value, witness = _suffix_min(divisor.coeffs, 1)
    return GlobalSeshadri(value=value, witness_index=witness,
                          point=stratum_point(tower, witness), within_hypothesis=within)


def seshadri_sup(tower: BottTower, divisor: DivisorClass, formal: bool = False) -> GlobalSeshadri:
    """eps(L, 1) = a_n, attained at every point off Gamma_n^(n-1)."""
    within = check_hypotheses(tower, divisor, formal)
    return GlobalSeshadri(value=divisor.coeffs[-1], witness_index=tower.n,
                          point=stratum_point(tower, tower.n), within_hypothesis=within)


def strata_report(tower: BottTower, divisor: DivisorClass, formal: bool = False) -> List[StratumValue]:
    """Seshadri constant on each stratum i = 1..n: the suffix minima of L."""
    check_hypotheses(tower, divisor, formal)
    report = []
    for i in range(1, tower.n + 1):
        value, witness = _suffix_min(divisor.coeffs, i)
        report.append(StratumValue(index=i, value=value, witness_index=witness))
    return report


def seshadri_by_recursion(tower: BottTower, divisor: DivisorClass, point: CoxPoint) -> int:
    """
    eps(L, x) through the fibre recursion:

        eps(X_n, L, x) = min{a_1, eps(X_n^(2), L|, x)}  if x on Gamma_n
                         eps(X_n^(2), L|, x)            otherwise

    with eps(P^1, O(a), x) = a.
    """
    check_hypotheses(tower, divisor)
    validate_point(tower, point)
    return _recurse(tower, divisor, point)


def _recurse(tower: BottTower, divisor: DivisorClass, point: CoxPoint) -> int:
    if tower.n == 1:
        return divisor.coeffs[0]
    fibre = vertical_subtower(tower, 2, tower.n)
    inner = _recurse(fibre, restrict_to_stage(tower, divisor, 2), project(point, 2))
    if in_gamma(tower, point, 1):
        return min(divisor.coeffs[0], inner)
    return inner
