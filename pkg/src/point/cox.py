"""
Cox Coordinates Module

Points of a Bott tower as classes [z_1:w_1: ... :z_n:w_n] of the quotient
construction. D'_i is the vanishing locus of z_i and D_i that of w_i. Only
the zero pattern of a point matters to the Seshadri formula, so an entry may
be given as a concrete rational or just as "nonzero" (written ``*``).

The group (C*)^n acts by
    z_i -> t_i * prod_{k<i} t_k^(-c_{k,i}) * z_i,    w_i -> t_i * w_i.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from src.tower.fan import BottTower, MaximalCone, Side
from src.utils.errors import (
    IndexOutOfRange,
    InvalidCoordinate,
    InvalidPair,
    LengthMismatch,
    MissingValues,
    ParseError,
)

Rational = Union[int, Fraction, str]


class Status(Enum):
    ZERO = "zero"
    NONZERO = "nonzero"


@dataclass(frozen=True)
class CoordEntry:
    """One homogeneous coordinate: its zero status and, optionally, its value."""
    status: Status
    value: Optional[Fraction] = None

    def __post_init__(self):
        if self.value is None:
            return
        value = Fraction(self.value)
        if (value == 0) != (self.status is Status.ZERO):
            raise InvalidCoordinate(f"value {value} contradicts status {self.status.value}",
                                    value=str(value), status=self.status.value)
        object.__setattr__(self, "value", value)

    @classmethod
    def of(cls, value: Rational) -> "CoordEntry":
        value = Fraction(value)
        return cls(Status.ZERO if value == 0 else Status.NONZERO, value)

    @classmethod
    def zero(cls) -> "CoordEntry":
        return cls(Status.ZERO, Fraction(0))

    @classmethod
    def nonzero(cls) -> "CoordEntry":
        return cls(Status.NONZERO)

    @classmethod
    def parse(cls, text: str) -> "CoordEntry":
        token = text.strip()
        if token == "*":
            return cls.nonzero()
        try:
            return cls.of(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational literal or '*': {token!r}", text=text) from None

    @property
    def is_zero(self) -> bool:
        return self.status is Status.ZERO

    def format(self) -> str:
        if self.value is None:
            return "*"
        return str(self.value)


Pair = Tuple[CoordEntry, CoordEntry]


@dataclass(frozen=True)
class CoxPoint:
    """A point given by n coordinate pairs (z_i, w_i)."""
    pairs: Tuple[Pair, ...]

    @property
    def n(self) -> int:
        return len(self.pairs)

    def z(self, i: int) -> CoordEntry:
        return self.pairs[i - 1][0]

    def w(self, i: int) -> CoordEntry:
        return self.pairs[i - 1][1]

    @property
    def has_values(self) -> bool:
        return all(entry.value is not None for pair in self.pairs for entry in pair)

    def zero_pattern(self) -> Tuple[Tuple[bool, bool], ...]:
        return tuple((z.is_zero, w.is_zero) for z, w in self.pairs)

    @classmethod
    def from_entries(cls, entries: Sequence[CoordEntry]) -> "CoxPoint":
        if len(entries) % 2:
            raise ParseError(f"expected an even number of coordinates, got {len(entries)}")
        return cls(tuple((entries[k], entries[k + 1]) for k in range(0, len(entries), 2)))

    @classmethod
    def from_values(cls, values: Sequence[Rational]) -> "CoxPoint":
        """Flat list z_1, w_1, ..., z_n, w_n of concrete rationals."""
        return cls.from_entries([CoordEntry.of(v) for v in values])

    @classmethod
    def from_pattern(cls, zeros: Sequence[Tuple[bool, bool]]) -> "CoxPoint":
        """Pattern-only point; True marks a vanishing coordinate."""
        def entry(is_zero: bool) -> CoordEntry:
            return CoordEntry.zero() if is_zero else CoordEntry.nonzero()
        return cls(tuple((entry(z), entry(w)) for z, w in zeros))

    @classmethod
    def parse(cls, text: str) -> "CoxPoint":
        """
        Parse ``[z1:w1:...:zn:wn]``; each entry a rational literal or ``*``.

        Raises:
            ParseError: on malformed input
        """
        body = text.strip()
        if body.startswith("[") and body.endswith("]"):
            body = body[1:-1]
        if not body.strip():
            raise ParseError("empty point", text=text)
        return cls.from_entries([CoordEntry.parse(token) for token in body.split(":")])

    def format(self) -> str:
        return "[" + ":".join(entry.format() for pair in self.pairs for entry in pair) + "]"


def validate_point(tower: BottTower, point: CoxPoint) -> CoxPoint:
    """
    Check that the point has n pairs and no pair is (0, 0).

    Raises:
        LengthMismatch: wrong number of pairs
        InvalidPair: a pair with both coordinates zero
    """
    if point.n != tower.n:
        raise LengthMismatch("point (pairs)", tower.n, point.n)
    for i, (z, w) in enumerate(point.pairs, 1):
        if z.is_zero and w.is_zero:
            raise InvalidPair(i)
    return point


def gamma_index(tower: BottTower, point: CoxPoint) -> int:
    """
    Smallest i with z_j = 0 for every j > i, i.e. the smallest i such that
    the point lies on Gamma_n^(i). Only z_2, ..., z_n are consulted.
    """
    validate_point(tower, point)
    for i in range(tower.n, 1, -1):
        if not point.z(i).is_zero:
            return i
    return 1


def in_gamma(tower: BottTower, point: CoxPoint, i: int) -> bool:
    """Whether the point lies on Gamma_n^(i) (equivalently on D'_{i+1} ∩ ... ∩ D'_n)."""
    if not 1 <= i <= tower.n:
        raise IndexOutOfRange("i", i, 1, tower.n)
    return gamma_index(tower, point) <= i


def fixed_point_of_cone(tower: BottTower, cone: MaximalCone) -> CoxPoint:
    """
    Torus-fixed point of a maximal cone: it lies on V(rho) exactly for the
    rays rho of the cone. Choosing v_i puts the point on D'_i (z_i = 0);
    choosing v_{n+i} puts it on D_i (w_i = 0).
    """
    if cone.n != tower.n:
        raise LengthMismatch("cone selector", tower.n, cone.n)
    pairs = []
    for side in cone.selector:
        if side is Side.LOWER:
            pairs.append((CoordEntry.zero(), CoordEntry.of(1)))
        else:
            pairs.append((CoordEntry.of(1), CoordEntry.zero()))
    return CoxPoint(tuple(pairs))


def _require_values(point: CoxPoint) -> None:
    if not point.has_values:
        raise MissingValues(
            "operation needs concrete coordinate values, got a pattern-only point",
            point=point.format(),
        )


def torus_action(tower: BottTower, point: CoxPoint, params: Sequence[Rational]) -> CoxPoint:
    """Apply (t_1, ..., t_n) in (Q*)^n to a point with concrete values."""
    validate_point(tower, point)
    _require_values(point)
    if len(params) != tower.n:
        raise LengthMismatch("torus parameters", tower.n, len(params))
    try:
        t = [Fraction(p) for p in params]
    except (ValueError, ZeroDivisionError):
        raise ParseError("torus parameters must be rational literals", text=str(list(params))) from None
    if any(p == 0 for p in t):
        raise InvalidCoordinate("torus parameters must be nonzero", params=[str(p) for p in t])

    pairs = []
    for i, (z, w) in enumerate(point.pairs, 1):
        z_twist = t[i - 1]
        for k in range(1, i):
            z_twist *= t[k - 1] ** (-tower.numbers.c(k, i))
        pairs.append((CoordEntry.of(z.value * z_twist), CoordEntry.of(w.value * t[i - 1])))
    return CoxPoint(tuple(pairs))


def canonicalize(tower: BottTower, point: CoxPoint) -> CoxPoint:
    """
    Normal form of a concrete point under the group action.

    The t_i are fixed in order i = 1..n: w_i is scaled to 1 when nonzero,
    otherwise z_i is. This is well defined because the twist on z_i only
    involves t_1, ..., t_i.

    Raises:
        MissingValues: for pattern-only points
    """
    validate_point(tower, point)
    _require_values(point)

    t: List[Fraction] = []
    for i, (z, w) in enumerate(point.pairs, 1):
        if not w.is_zero:
            t.append(1 / w.value)
            continue
        twist = Fraction(1)
        for k in range(1, i):
            twist *= t[k - 1] ** (-tower.numbers.c(k, i))
        t.append(1 / (z.value * twist))
    return torus_action(tower, point, t)


def same_orbit(tower: BottTower, first: CoxPoint, second: CoxPoint) -> bool:
    """Whether two concrete points represent the same point of the tower."""
    return canonicalize(tower, first) == canonicalize(tower, second)


def project(point: CoxPoint, j: int) -> CoxPoint:
    """
    Drop the first j-1 pairs: the point viewed on the vertical subtower X_n^(j)
    (the fibre through it), identified with the Bott tower on pairs j..n.
    """
    if not 1 <= j <= point.n:
        raise IndexOutOfRange("j", j, 1, point.n)
    return CoxPoint(point.pairs[j - 1:])


def points_on_divisor(tower: BottTower, point: CoxPoint) -> List[str]:
    """Invariant prime divisors through the point, as labels D'_i / D_i."""
    validate_point(tower, point)
    labels = []
    for i, (z, w) in enumerate(point.pairs, 1):
        if z.is_zero:
            labels.append(f"D'_{i}")
        if w.is_zero:
            labels.append(f"D_{i}")
    return labels
