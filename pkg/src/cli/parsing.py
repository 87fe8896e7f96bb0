"""
Input parsing for the command line.

Towers come from a JSON TowerSpec file (``--tower``), inline rows (``--c``)
or, when neither is given, a constant tower of the requested height.
"""

from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, ValidationError, model_validator

from src.divisor.picard import DivisorClass
from src.tower.fan import BottNumbers, BottTower, build_tower
from src.utils.errors import ParseError


class TowerSpec(BaseModel):
    """Tower input document: height and upper-triangular Bott number rows."""
    n: int = Field(ge=1)
    bott_numbers: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_rows(self) -> "TowerSpec":
        if len(self.bott_numbers) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} rows of Bott numbers, got {len(self.bott_numbers)}")
        for k, row in enumerate(self.bott_numbers, 1):
            if len(row) != self.n - k:
                raise ValueError(f"row {k} must hold {self.n - k} Bott numbers, got {len(row)}")
        return self

    def to_numbers(self) -> BottNumbers:
        return BottNumbers(self.n, tuple(tuple(row) for row in self.bott_numbers))

    @classmethod
    def from_numbers(cls, numbers: BottNumbers) -> "TowerSpec":
        return cls(n=numbers.n, bott_numbers=[list(row) for row in numbers.rows])


def load_tower_spec(path: Path) -> TowerSpec:
    """
    Read a TowerSpec JSON file.

    Raises:
        ParseError: if the file cannot be read or does not validate
    """
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"cannot read tower file: {e}", text=str(path)) from e
    try:
        return TowerSpec.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        raise ParseError(f"invalid tower file: {first['msg']}", text=str(path)) from e


def _parse_integers(text: str, what: str) -> List[int]:
    tokens = [token.strip() for token in text.split(",")]
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise ParseError(f"{what} must be comma-separated integers", text=text) from e


def parse_rows(text: str) -> BottNumbers:
    """
    Inline Bott numbers: rows separated by ``;``, entries by ``,``.

    ``"1,2,3;4,5;6"`` is the height-four tower with c_{1,2}=1, c_{1,3}=2,
    c_{1,4}=3, c_{2,3}=4, c_{2,4}=5, c_{3,4}=6. The empty string is the
    height-one tower.
    """
    body = text.strip()
    if not body:
        return BottNumbers(1)
    rows = [_parse_integers(row, "Bott number row") for row in body.split(";")]
    return BottNumbers(len(rows) + 1, tuple(tuple(row) for row in rows))


def parse_bundle(text: str) -> DivisorClass:
    """``"1,3,8,4"`` as the class (a_1, ..., a_n)."""
    if not text.strip():
        raise ParseError("bundle must not be empty", text=text)
    return DivisorClass(tuple(_parse_integers(text, "bundle")))


def resolve_tower(n: int, tower_file: Optional[Path] = None, rows: Optional[str] = None,
                  default_bott_number: int = 1) -> BottTower:
    """
    Build the tower a command operates on.

    Args:
        n: Height to use when no tower is given explicitly
        tower_file: JSON TowerSpec path
        rows: Inline rows in ``parse_rows`` syntax
        default_bott_number: Value of every c_{i,j} for the implicit tower

    Raises:
        ParseError: if both a file and inline rows are given
    """
    if tower_file is not None and rows is not None:
        raise ParseError("give either --tower or --c, not both")
    if tower_file is not None:
        numbers = load_tower_spec(tower_file).to_numbers()
    elif rows is not None:
        numbers = parse_rows(rows)
    else:
        numbers = BottNumbers.constant(n, default_bott_number)
    return build_tower(numbers)
