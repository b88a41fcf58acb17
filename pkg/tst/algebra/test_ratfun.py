import pytest

from ramcc.algebra.polynomials import toPoly
from ramcc.algebra.ratfun import RationalFunction, pnThRoot, embedInResidueField, isInBaseField, contractVariable, \
    decomposeOverF
from ramcc.errors import DivisionByZero, ZeroPolynomial


def test_normalisation():
    p = 5
    f = RationalFunction.normalize(toPoly([1, 0, -1], p), toPoly([1, -1], p), p)
    assert f.numerator == toPoly([1, 1], p)
    assert f.denominator == (1,)

    g = RationalFunction.normalize(toPoly([1], p), toPoly([2, 0], p), p)
    assert g.denominator == (1, 0)
    assert g.numerator == (3,)

    with pytest.raises(DivisionByZero):
        RationalFunction.normalize((1,), (), p)


def test_field_arithmetic():
    p = 3
    x = RationalFunction.generator(p)
    f = x / (x + 1)
    assert (f * f.inverse()).isOne()
    assert (f - f).isZero()
    assert (x**3 + 1) == (x + 1)**3
    assert f.toString() == "x/(x + 1)"


def test_order_at_zero():
    p = 7
    x = RationalFunction.generator(p)
    assert (x**2 / (x + 1)).orderAtZero() == 2
    assert (1 / x).orderAtZero() == -1
    assert RationalFunction.constant(3, p).orderAtZero() == 0
    with pytest.raises(ZeroPolynomial):
        RationalFunction.constant(0, p).orderAtZero()


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1), (3, 2), (5, 1)])
def test_pth_root_inverts_frobenius(p, n):
    x = RationalFunction.generator(p)
    for f in [-x, x / (x + 1), x**3 - x + 2]:
        root = pnThRoot(f, n)
        assert root.variable == "u"
        assert root ** (p**n) == embedInResidueField(f, n)
        assert isInBaseField(embedInResidueField(f, n), n)
        assert contractVariable(embedInResidueField(f, n), n, "x") == f


def test_decomposition_over_the_base():
    p, n = 3, 1
    u = RationalFunction.generator(p, "u")
    coordinates = decomposeOverF(u, n)
    assert [c.isZero() for c in coordinates] == [True, False, True]
    assert coordinates[1].isOne()

    # 1/u = u^2/x
    coordinates = decomposeOverF(u.inverse(), n)
    assert coordinates[0].isZero() and coordinates[1].isZero()
    assert coordinates[2] == RationalFunction.generator(p).inverse()
