"""
Exact Integer Linear Algebra

Thin wrappers around sympy's DomainMatrix over ZZ. Everything stays in
arbitrary-precision integers; no floating point is involved anywhere.
"""

from typing import List, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from src.utils.errors import InternalConsistencyError, SingularSystem


def _domain_matrix(rows: Sequence[Sequence[int]]) -> DomainMatrix:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    return DomainMatrix([[ZZ(int(v)) for v in row] for row in rows], (nrows, ncols), ZZ)


def integer_determinant(rows: Sequence[Sequence[int]]) -> int:
    """
    Determinant of a square integer matrix by fraction-free elimination.

    Args:
        rows: Matrix rows

    Returns:
        The exact determinant
    """
    if not rows:
        return 1
    return int(_domain_matrix(rows).det())


def columns_to_rows(columns: Sequence[Sequence[int]]) -> List[List[int]]:
    """Transpose a list of column vectors into matrix rows."""
    if not columns:
        return []
    return [[int(col[r]) for col in columns] for r in range(len(columns[0]))]


def solve_unimodular(columns: Sequence[Sequence[int]], rhs: Sequence[int]) -> List[int]:
    """
    Solve ``sum_k y_k * columns[k] = rhs`` exactly over the integers.

    The system is solved fraction-free (``DomainMatrix.solve_den``), then the
    common denominator is divided out. Integrality of the result is checked,
    not assumed.

    Args:
        columns: Square system given as its column vectors
        rhs: Right-hand side

    Returns:
        Integer coefficients y_k, one per column

    Raises:
        SingularSystem: if the columns are linearly dependent
        InternalConsistencyError: if the solution is not integral
    """
    if not columns:
        if any(int(v) != 0 for v in rhs):
            raise SingularSystem("empty system with nonzero right-hand side", rhs=list(rhs))
        return []

    matrix = _domain_matrix(columns_to_rows(columns))
    if matrix.shape[0] != matrix.shape[1]:
        raise SingularSystem("system is not square", shape=list(matrix.shape))
    if matrix.det() == 0:
        raise SingularSystem("columns are linearly dependent", columns=[list(c) for c in columns])

    b = _domain_matrix([[v] for v in rhs])
    numerators, denominator = matrix.solve_den(b)
    denominator = int(denominator)

    solution = []
    for entry in numerators.to_list():
        value = int(entry[0])
        if value % denominator:
            raise InternalConsistencyError(
                "non-integral solution of a unimodular system",
                numerator=value, denominator=denominator,
            )
        solution.append(value // denominator)
    return solution
