"""
Bott Tower Fan Module

Builds the complete smooth fan of a Bott tower from its Bott numbers:
- 2n rays: v_i = e_i and v_{n+i} = -e_i + sum_{j>i} c_{i,j} e_j
- 2^n maximal cones, one per choice of v_i or v_{n+i} in every slot
- n * 2^(n-1) walls, each shared by two cones differing in a single slot

Rays are numbered 1..2n and slots 1..n throughout, matching the usual
indexing of the tower.
"""

import itertools
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import Dict, FrozenSet, Iterator, List, Mapping, Sequence, Tuple

import structlog

from src.utils.errors import IndexOutOfRange, MalformedBottNumbers, NonSmoothFan, ParseError
from src.utils.linalg import columns_to_rows, integer_determinant

logger = structlog.get_logger(__name__)


class Side(Enum):
    """Which ray of slot i a maximal cone uses."""
    LOWER = "lower"  # v_i
    UPPER = "upper"  # v_{n+i}


@dataclass(frozen=True)
class BottNumbers:
    """
    Bott numbers c_{i,j} (1 <= i < j <= n) stored as upper-triangular rows.

    Row k (1-based) holds c_{k,k+1}, ..., c_{k,n}; there are n-1 rows, so a
    height-one tower has no rows at all.
    """
    n: int
    rows: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise MalformedBottNumbers(f"tower height must be a positive integer, got {self.n!r}")
        rows = tuple(tuple(int(c) for c in row) for row in self.rows)
        if len(rows) != self.n - 1:
            raise MalformedBottNumbers(
                f"expected {self.n - 1} rows of Bott numbers, got {len(rows)}",
                n=self.n, rows=[list(r) for r in rows],
            )
        for k, row in enumerate(rows, 1):
            if len(row) != self.n - k:
                raise MalformedBottNumbers(
                    f"row {k} must hold {self.n - k} Bott numbers, got {len(row)}",
                    n=self.n, row=k, length=len(row),
                )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_mapping(cls, n: int, numbers: Mapping[Tuple[int, int], int]) -> "BottNumbers":
        """Build from a {(i, j): c_ij} mapping holding exactly n(n-1)/2 entries."""
        expected = {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)}
        keys = set(numbers)
        if keys != expected:
            raise MalformedBottNumbers(
                "Bott number keys do not match 1 <= i < j <= n",
                missing=sorted(expected - keys), extra=sorted(keys - expected),
            )
        rows = tuple(
            tuple(int(numbers[(i, j)]) for j in range(i + 1, n + 1))
            for i in range(1, n)
        )
        return cls(n, rows)

    @classmethod
    def constant(cls, n: int, value: int) -> "BottNumbers":
        """Every c_{i,j} equal to value."""
        return cls(n, tuple(tuple(value for _ in range(n - k)) for k in range(1, n)))

    def c(self, i: int, j: int) -> int:
        """The Bott number c_{i,j}."""
        if not 1 <= i < self.n:
            raise IndexOutOfRange("i", i, 1, self.n - 1)
        if not i < j <= self.n:
            raise IndexOutOfRange("j", j, i + 1, self.n)
        return self.rows[i - 1][j - i - 1]

    def items(self) -> Iterator[Tuple[Tuple[int, int], int]]:
        for i, row in enumerate(self.rows, 1):
            for offset, value in enumerate(row):
                yield (i, i + offset + 1), value

    def as_mapping(self) -> Dict[Tuple[int, int], int]:
        return dict(self.items())

    def all_positive(self) -> bool:
        return all(value > 0 for _, value in self.items())

    def restrict(self, j: int, i: int) -> "BottNumbers":
        """Numbers {c_{k,l} : j <= k < l <= i}, reindexed to start at 1."""
        return BottNumbers(
            i - j + 1,
            tuple(tuple(self.c(k, l) for l in range(k + 1, i + 1)) for k in range(j, i)),
        )


@dataclass(frozen=True)
class Ray:
    index: int
    vector: Tuple[int, ...]


@dataclass(frozen=True)
class MaximalCone:
    """A maximal cone, encoded by its per-slot choice of lower or upper ray."""
    selector: Tuple[Side, ...]

    @property
    def n(self) -> int:
        return len(self.selector)

    @classmethod
    def all_lower(cls, n: int) -> "MaximalCone":
        return cls(tuple(Side.LOWER for _ in range(n)))

    @classmethod
    def all_upper(cls, n: int) -> "MaximalCone":
        return cls(tuple(Side.UPPER for _ in range(n)))

    @classmethod
    def from_label(cls, label: str) -> "MaximalCone":
        """Inverse of ``label``: a string over {L, U}."""
        sides = {"L": Side.LOWER, "U": Side.UPPER}
        try:
            return cls(tuple(sides[ch] for ch in label.upper()))
        except KeyError:
            raise ParseError(f"cone label must use only L and U: {label!r}", text=label) from None

    @property
    def label(self) -> str:
        return "".join("L" if side is Side.LOWER else "U" for side in self.selector)

    def ray_index(self, slot: int) -> int:
        side = self.selector[slot - 1]
        return slot if side is Side.LOWER else self.n + slot

    def ray_indices(self) -> Tuple[int, ...]:
        return tuple(self.ray_index(k) for k in range(1, self.n + 1))

    def with_side(self, slot: int, side: Side) -> "MaximalCone":
        selector = list(self.selector)
        selector[slot - 1] = side
        return MaximalCone(tuple(selector))


@dataclass(frozen=True)
class Wall:
    """
    An (n-1)-dimensional cone: the facet shared by two maximal cones that
    differ only in ``slot``. ``adjacent[0]`` uses v_slot, ``adjacent[1]`` uses
    v_{n+slot}.
    """
    slot: int
    rays: FrozenSet[int]
    adjacent: Tuple[MaximalCone, MaximalCone]

    @property
    def opposite_rays(self) -> Tuple[int, int]:
        n = self.adjacent[0].n
        return (self.slot, n + self.slot)

    def sorted_rays(self) -> List[int]:
        return sorted(self.rays)


def ray_vectors(numbers: BottNumbers) -> List[Tuple[int, ...]]:
    """The 2n ray vectors, in ray order 1..2n."""
    n = numbers.n
    vectors = []
    for i in range(1, n + 1):
        vectors.append(tuple(1 if k == i else 0 for k in range(1, n + 1)))
    for i in range(1, n + 1):
        vec = []
        for k in range(1, n + 1):
            if k < i:
                vec.append(0)
            elif k == i:
                vec.append(-1)
            else:
                vec.append(numbers.c(i, k))
        vectors.append(tuple(vec))
    return vectors


@dataclass(frozen=True)
class BottTower:
    """A Bott tower together with its fan. Build it with ``build_tower``."""
    numbers: BottNumbers
    rays: Tuple[Ray, ...] = field(repr=False)

    @property
    def n(self) -> int:
        return self.numbers.n

    def ray(self, index: int) -> Ray:
        if not 1 <= index <= 2 * self.n:
            raise IndexOutOfRange("ray", index, 1, 2 * self.n)
        return self.rays[index - 1]

    @property
    def cone_count(self) -> int:
        return 2 ** self.n

    @property
    def wall_count(self) -> int:
        return self.n * 2 ** (self.n - 1)

    def cone_vectors(self, cone: MaximalCone) -> List[Tuple[int, ...]]:
        return [self.rays[k - 1].vector for k in cone.ray_indices()]

    @cached_property
    def maximal_cones(self) -> Tuple[MaximalCone, ...]:
        """All 2^n maximal cones, slot 1 varying slowest."""
        return tuple(
            MaximalCone(selector)
            for selector in itertools.product((Side.LOWER, Side.UPPER), repeat=self.n)
        )

    @cached_property
    def walls(self) -> Tuple[Wall, ...]:
        return tuple(_enumerate_walls(self))

    def wall_of(self, cone: MaximalCone, slot: int) -> Wall:
        """The facet of ``cone`` obtained by dropping the ray in ``slot``."""
        if cone.n != self.n:
            raise IndexOutOfRange("cone dimension", cone.n, self.n, self.n)
        if not 1 <= slot <= self.n:
            raise IndexOutOfRange("slot", slot, 1, self.n)
        rays = frozenset(cone.ray_index(k) for k in range(1, self.n + 1) if k != slot)
        return Wall(
            slot=slot,
            rays=rays,
            adjacent=(cone.with_side(slot, Side.LOWER), cone.with_side(slot, Side.UPPER)),
        )


def cone_determinant(tower: BottTower, cone: MaximalCone) -> int:
    """Determinant of the matrix whose columns are the cone's rays."""
    return integer_determinant(columns_to_rows(tower.cone_vectors(cone)))


def expected_determinant(cone: MaximalCone) -> int:
    """
    Determinant of a Bott cone from its selector alone.

    Ordered by slot, the cone's rays form a lower triangular matrix whose
    diagonal is +1 on LOWER slots and -1 on UPPER slots.
    """
    uppers = sum(1 for side in cone.selector if side is Side.UPPER)
    return -1 if uppers % 2 else 1


def _validate(tower: BottTower) -> None:
    # Checks the triangular shape every cone determinant relies on, in O(n^2).
    n = tower.n
    vectors = [ray.vector for ray in tower.rays]
    if len(set(vectors)) != len(vectors):
        raise NonSmoothFan("rays are not pairwise distinct", n=n)

    for k in range(1, n + 1):
        lower = vectors[k - 1]
        upper = vectors[n + k - 1]
        if any(lower[j] != (1 if j == k - 1 else 0) for j in range(n)):
            raise NonSmoothFan("lower ray is not a basis vector", ray=k)
        if upper[k - 1] != -1 or any(upper[j] != 0 for j in range(k - 1)):
            raise NonSmoothFan("upper ray breaks the triangular shape", ray=n + k)


@lru_cache(maxsize=512)
def build_tower(numbers: BottNumbers) -> BottTower:
    """
    Construct and validate the fan of the Bott tower with the given numbers.

    Args:
        numbers: Bott numbers; any integers are accepted at this layer

    Returns:
        The validated tower

    Raises:
        NonSmoothFan: if a cone fails the smoothness check (never expected)
    """
    vectors = ray_vectors(numbers)
    tower = BottTower(
        numbers=numbers,
        rays=tuple(Ray(index=k, vector=v) for k, v in enumerate(vectors, 1)),
    )
    _validate(tower)
    logger.debug("Built Bott tower",
                 n=tower.n,
                 maximal_cones=tower.cone_count,
                 walls=tower.wall_count)
    return tower


def _enumerate_walls(tower: BottTower) -> Iterator[Wall]:
    # Each wall is emitted from its adjacent cone that uses the lower ray.
    for cone in tower.maximal_cones:
        for slot in range(1, tower.n + 1):
            if cone.selector[slot - 1] is Side.LOWER:
                yield tower.wall_of(cone, slot)


def enumerate_walls(tower: BottTower) -> List[Wall]:
    """Every wall of the fan exactly once, with its two adjacent cones."""
    return list(tower.walls)


def vertical_subtower(tower: BottTower, j: int, i: int) -> BottTower:
    """
    The vertical tower X_i^(j): Bott numbers {c_{k,l} : j <= k < l <= i}.

    Args:
        tower: Ambient tower
        j: First stage kept (1-based)
        i: Last stage kept, j <= i <= n

    Returns:
        Tower of dimension i - j + 1
    """
    if not 1 <= j <= tower.n:
        raise IndexOutOfRange("j", j, 1, tower.n)
    if not j <= i <= tower.n:
        raise IndexOutOfRange("i", i, j, tower.n)
    return build_tower(tower.numbers.restrict(j, i))


def tower_from_rows(rows: Sequence[Sequence[int]]) -> BottTower:
    """Convenience: tower whose height is len(rows) + 1."""
    return build_tower(BottNumbers(len(rows) + 1, tuple(tuple(r) for r in rows)))
