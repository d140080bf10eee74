from fractions import Fraction

import sympy  # type: ignore
from sympy.polys.matrices import DomainMatrix  # type: ignore
from sympy.polys.matrices.exceptions import DMError  # type: ignore

from pjp.rootsys import ComputationError

from typing import List, Sequence

Rows = Sequence[Sequence[Fraction]]


class SingularGram(ComputationError):
    pass


def to_domain(rows: Rows) -> DomainMatrix:
    """Return the rows as a dense matrix over ℚ."""

    height = len(rows)
    width = len(rows[0]) if height > 0 else 0
    return DomainMatrix(
        [[sympy.QQ(c.numerator, c.denominator) for c in row] for row in rows],
        (height, width),
        sympy.QQ,
    )


def to_fraction(value: sympy.Rational) -> Fraction:
    if not value.is_Rational:
        raise ComputationError(f"{value} is not rational")
    return Fraction(int(value.p), int(value.q))


def solve(rows: Rows, rhs: Sequence[Fraction]) -> List[Fraction]:
    """Return the exact solution x of A·x = b.

    Raise `SingularGram` if A is singular.
    """

    if len(rows) == 0:
        return []
    matrix = to_domain(rows)
    try:
        solution = matrix.lu_solve(to_domain([[c] for c in rhs])).to_Matrix()
    except (DMError, ValueError, ZeroDivisionError) as e:
        raise SingularGram(f"singular {len(rows)}×{len(rows)} system ({e})")
    return [to_fraction(solution[i, 0]) for i in range(len(rows))]


def rank(rows: Rows) -> int:
    if len(rows) == 0:
        return 0
    return int(to_domain(rows).rank())


def is_diagonal(rows: Rows) -> bool:
    return all(
        rows[i][j] == 0 for i in range(len(rows)) for j in range(len(rows[i])) if i != j
    )
