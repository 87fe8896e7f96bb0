"""
Picard Lattice Module

Divisor classes on a Bott tower in the basis D_1, ..., D_n, where D_i is the
invariant prime divisor of ray v_{n+i} and D'_i that of ray v_i. Arbitrary
torus-invariant divisors are reduced to this basis through the relations

    D'_1 ~ D_1,    D'_i ~ D_i - c_{1,i} D_1 - ... - c_{i-1,i} D_{i-1}.

Linear and numerical equivalence coincide here, so a class is identified
with its coefficient vector.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

from src.tower.fan import BottTower
from src.utils.errors import IndexOutOfRange, LengthMismatch, NonPositiveBottNumbers


@dataclass(frozen=True)
class DivisorClass:
    """a_1 D_1 + ... + a_n D_n"""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "DivisorClass":
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, n: int) -> "DivisorClass":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "DivisorClass":
        if not 1 <= i <= n:
            raise IndexOutOfRange("i", i, 1, n)
        return cls(tuple(1 if k == i else 0 for k in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """1-based coefficient a_i."""
        if not 1 <= i <= self.n:
            raise IndexOutOfRange("i", i, 1, self.n)
        return self.coeffs[i - 1]

    def _check_length(self, other: "DivisorClass") -> None:
        if other.n != self.n:
            raise LengthMismatch("divisor class", self.n, other.n)

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_length(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return self + (-other)

    def scale(self, m: int) -> "DivisorClass":
        return DivisorClass(tuple(m * a for a in self.coeffs))

    def __mul__(self, m: int) -> "DivisorClass":
        return self.scale(m)

    __rmul__ = __mul__

    def has_nonnegative_coeffs(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def has_positive_coeffs(self) -> bool:
        return all(a > 0 for a in self.coeffs)


@dataclass(frozen=True)
class RayDivisor:
    """A torus-invariant divisor sum_k d_k D_{v_k}, indexed by rays 1..2n."""
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(d) for d in self.coeffs))

    def __add__(self, other: "RayDivisor") -> "RayDivisor":
        if len(other.coeffs) != len(self.coeffs):
            raise LengthMismatch("ray divisor", len(self.coeffs), len(other.coeffs))
        return RayDivisor(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, m: int) -> "RayDivisor":
        return RayDivisor(tuple(m * d for d in self.coeffs))


def prime_divisor(tower: BottTower, ray: int) -> RayDivisor:
    """The prime divisor V(v_ray) as a ray divisor."""
    if not 1 <= ray <= 2 * tower.n:
        raise IndexOutOfRange("ray", ray, 1, 2 * tower.n)
    return RayDivisor(tuple(1 if k == ray else 0 for k in range(1, 2 * tower.n + 1)))


def principal_divisor(tower: BottTower, character: Sequence[int]) -> RayDivisor:
    """div(chi^u) = sum_rho <u, v_rho> D_rho for a lattice character u."""
    if len(character) != tower.n:
        raise LengthMismatch("character", tower.n, len(character))
    return RayDivisor(tuple(
        sum(u * v for u, v in zip(character, ray.vector)) for ray in tower.rays
    ))


def reduce_to_basis(tower: BottTower, divisor: RayDivisor) -> DivisorClass:
    """
    Unique D-basis representative of a ray divisor's class.

    Args:
        tower: Ambient tower
        divisor: Coefficients on rays 1..2n

    Returns:
        The class (a_1, ..., a_n)
    """
    n = tower.n
    if len(divisor.coeffs) != 2 * n:
        raise LengthMismatch("ray divisor", 2 * n, len(divisor.coeffs))

    coeffs = list(divisor.coeffs[n:])
    for i in range(1, n + 1):
        d_prime = divisor.coeffs[i - 1]
        if not d_prime:
            continue
        coeffs[i - 1] += d_prime
        for k in range(1, i):
            coeffs[k - 1] -= d_prime * tower.numbers.c(k, i)
    return DivisorClass(tuple(coeffs))


def require_positive_bott_numbers(tower: BottTower) -> None:
    if not tower.numbers.all_positive():
        raise NonPositiveBottNumbers(
            "the nef/ample criterion and the Seshadri formula need positive Bott numbers",
            bott_numbers=[list(row) for row in tower.numbers.rows],
        )


def _check_class(tower: BottTower, divisor: DivisorClass) -> None:
    if divisor.n != tower.n:
        raise LengthMismatch("divisor class", tower.n, divisor.n)


def is_nef(tower: BottTower, divisor: DivisorClass) -> bool:
    """Nef iff every a_i >= 0 (positive Bott numbers)."""
    _check_class(tower, divisor)
    require_positive_bott_numbers(tower)
    return divisor.has_nonnegative_coeffs()


def is_ample(tower: BottTower, divisor: DivisorClass) -> bool:
    """Ample iff every a_i > 0 (positive Bott numbers)."""
    _check_class(tower, divisor)
    require_positive_bott_numbers(tower)
    return divisor.has_positive_coeffs()


def restrict_to_stage(tower: BottTower, divisor: DivisorClass, i: int) -> DivisorClass:
    """
    Restriction of L to the fibre subtower X_n^(i), 2 <= i <= n.

    The result lives on vertical_subtower(tower, i, n) and is (a_i, ..., a_n).
    """
    _check_class(tower, divisor)
    if not 2 <= i <= tower.n:
        raise IndexOutOfRange("i", i, 2, tower.n)
    return DivisorClass(divisor.coeffs[i - 1:])


def class_of_fiber_divisor(tower: BottTower) -> DivisorClass:
    """Numerical class of the fibre X_n^(2) over a point of X_1, namely D_1."""
    if tower.n < 2:
        raise IndexOutOfRange("n", tower.n, 2)
    return DivisorClass.unit(tower.n, 1)
