import pytest

from ramcc.algebra.ratfun import RationalFunction
from ramcc.algebra.linear import rank, solveLinear, inverseMatrix
from ramcc.errors import DivisionByZero


def test_solve():
    p = 3
    x   = RationalFunction.generator(p)
    one = RationalFunction.constant(1, p)
    A = [[x, one], [one, x]]
    assert rank(A) == 2
    assert solveLinear(A, [x + 1, x + 1]) == [one, one]

    inverse = inverseMatrix(A)
    for i in range(2):
        for j in range(2):
            entry = inverse[i][0]*A[0][j] + inverse[i][1]*A[1][j]
            assert entry.isOne() if i == j else entry.isZero()


def test_singular():
    p = 5
    x   = RationalFunction.generator(p)
    one = RationalFunction.constant(1, p)
    A = [[one, x], [x, x*x]]
    assert rank(A) == 1
    assert rank([]) == 0
    with pytest.raises(DivisionByZero):
        solveLinear(A, [one, one])
    with pytest.raises(DivisionByZero):
        inverseMatrix(A)
