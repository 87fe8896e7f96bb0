"""
Curve Classes and Intersection Module

Curve classes live in the basis Gamma_n^(1), ..., Gamma_n^(n), which is dual
to D_1, ..., D_n, so the pairing with divisor classes is diagonal.

Torus-invariant curves V(tau) come from walls tau. Across a wall with
opposite rays v_u, v_u' the relation

    v_u + v_u' + sum_{rho in tau} b_rho v_rho = 0

gives D_u . V(tau) = D_u' . V(tau) = 1, D_rho . V(tau) = b_rho for rho in
tau, and 0 for every other ray.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from src.divisor.picard import DivisorClass
from src.tower.fan import BottTower, MaximalCone, Wall
from src.utils.errors import IndexOutOfRange, InternalConsistencyError, LengthMismatch
from src.utils.linalg import solve_unimodular


@dataclass(frozen=True)
class CurveClass:
    """p_1 Gamma^(1) + ... + p_n Gamma^(n)"""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(p) for p in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "CurveClass":
        return cls(tuple(coeffs))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __add__(self, other: "CurveClass") -> "CurveClass":
        if other.n != self.n:
            raise LengthMismatch("curve class", self.n, other.n)
        return CurveClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, m: int) -> "CurveClass":
        return CurveClass(tuple(m * p for p in self.coeffs))

    def is_effective(self) -> bool:
        return all(p >= 0 for p in self.coeffs)


@dataclass(frozen=True)
class WallRelation:
    """Integer relation across a wall, keyed by ray index."""
    wall: Wall
    coefficients: Tuple[Tuple[int, int], ...]

    def coefficient(self, ray: int) -> int:
        return dict(self.coefficients).get(ray, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.coefficients)


def pair(divisor: DivisorClass, curve: CurveClass) -> int:
    """Intersection number L . C = sum_i a_i p_i."""
    if divisor.n != curve.n:
        raise LengthMismatch("curve class", divisor.n, curve.n)
    return sum(a * p for a, p in zip(divisor.coeffs, curve.coeffs))


def relation_residual(tower: BottTower, relation: WallRelation) -> Tuple[int, ...]:
    """sum_rho coeff_rho * v_rho; the zero vector for a correct relation."""
    total = [0] * tower.n
    for ray, coeff in relation.coefficients:
        for k, entry in enumerate(tower.ray(ray).vector):
            total[k] += coeff * entry
    return tuple(total)


@lru_cache(maxsize=65536)
def wall_relation(tower: BottTower, wall: Wall) -> WallRelation:
    """
    Solve v_u + v_u' = -sum_{rho in wall} b_rho v_rho exactly.

    Args:
        tower: Ambient tower
        wall: A wall of the tower's fan

    Returns:
        The relation, with coefficient 1 on both opposite rays

    Raises:
        SingularSystem: if the wall rays are dependent (never for a smooth fan)
    """
    u, u_prime = wall.opposite_rays
    opposite_sum = [a + b for a, b in zip(tower.ray(u).vector, tower.ray(u_prime).vector)]
    wall_rays = wall.sorted_rays()

    if wall_rays:
        # Wall rays plus v_u span a maximal cone, so the system is unimodular
        # and the v_u coordinate of the solution must vanish.
        columns = [tower.ray(k).vector for k in wall_rays] + [tower.ray(u).vector]
        solution = solve_unimodular(columns, [-s for s in opposite_sum])
        if solution[-1] != 0:
            raise InternalConsistencyError(
                "opposite rays do not sum into the wall span",
                wall=wall_rays, slot=wall.slot,
            )
        coefficients = dict(zip(wall_rays, solution[:-1]))
    else:
        coefficients = {}
    coefficients[u] = 1
    coefficients[u_prime] = 1

    relation = WallRelation(wall=wall, coefficients=tuple(sorted(coefficients.items())))
    if any(relation_residual(tower, relation)):
        raise InternalConsistencyError("wall relation does not reconstruct", wall=wall_rays)
    return relation


def invariant_curve_class(tower: BottTower, wall: Wall) -> CurveClass:
    """
    Class of V(wall): p_j = D_j . V(wall), where D_j = V(v_{n+j}).

    By duality these intersection numbers are the Gamma-basis coordinates.
    """
    relation = wall_relation(tower, wall)
    n = tower.n
    return CurveClass(tuple(relation.coefficient(n + j) for j in range(1, n + 1)))


def gamma_class(tower: BottTower, i: int) -> CurveClass:
    """Class of Gamma_n^(i): the i-th unit vector."""
    if not 1 <= i <= tower.n:
        raise IndexOutOfRange("i", i, 1, tower.n)
    return CurveClass(tuple(1 if k == i else 0 for k in range(1, tower.n + 1)))


def mori_generators(tower: BottTower) -> List[CurveClass]:
    """Gamma_n^(1), ..., Gamma_n^(n); they span the Mori cone."""
    return [gamma_class(tower, i) for i in range(1, tower.n + 1)]


def walls_through(tower: BottTower, cone: MaximalCone) -> List[Wall]:
    """The n walls contained in a maximal cone, by dropped slot."""
    return [tower.wall_of(cone, slot) for slot in range(1, tower.n + 1)]
