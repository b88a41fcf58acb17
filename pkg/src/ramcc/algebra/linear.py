"""
Gaussian elimination over a field of rational functions.
"""
from typing import List, Tuple

from .ratfun import RationalFunction
from ..errors import DivisionByZero

Matrix = List[List[RationalFunction]]


def _echelon(matrix: Matrix) -> Tuple[Matrix, List[int]]:
    rows = [list(row) for row in matrix]
    pivots = []
    r = 0
    n_cols = len(rows[0]) if rows else 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].isZero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inverse = rows[r][c].inverse()
        rows[r] = [entry * inverse for entry in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].isZero():
                factor = rows[i][c]
                rows[i] = [a - factor*b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Matrix) -> int:
    if not matrix:
        return 0
    return len(_echelon(matrix)[1])


def solveLinear(matrix: Matrix, rhs: List[RationalFunction]) -> List[RationalFunction]:
    """
    Solve A·y = b for a square invertible A.
    """
    n = len(matrix)
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = _echelon(augmented)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("Singular system.")
    return [reduced[i][n] for i in range(n)]


def inverseMatrix(matrix: Matrix) -> Matrix:
    n = len(matrix)
    p, variable = matrix[0][0].p, matrix[0][0].variable
    one  = RationalFunction.constant(1, p, variable)
    zero = RationalFunction.constant(0, p, variable)
    augmented = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    reduced, pivots = _echelon(augmented)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("Singular matrix.")
    return [row[n:] for row in reduced]
