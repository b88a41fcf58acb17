import pytest

from ramcc.algebra.ratfun import RationalFunction
from ramcc.algebra.residuepoly import ResiduePolynomial, residueRoots
from ramcc.errors import ZeroPolynomial


def constants(values, p):
    return [RationalFunction.constant(c, p, "u") for c in values]


def test_artin_schreier_polynomial():
    p = 3
    u = RationalFunction.generator(p, "u")
    P = ResiduePolynomial.productOfLinear(constants(range(p), p), p)  # T^3 - T
    assert P.degree() == 3
    assert P.isAdditive()
    assert P.coefficient(2).isZero()
    assert P.linearCoefficient() == RationalFunction.constant(-1, p, "u")
    assert P.toString() == "T^3 - T"
    assert P.evaluate(u) == u**3 - u

    shift = ResiduePolynomial.linear(RationalFunction.constant(1, p, "u"))
    assert P.compose(shift) == P
    assert not (P + ResiduePolynomial.constant(u)).isAdditive()
    assert (P - P).degree() == -1


def test_roots():
    p = 3
    P = ResiduePolynomial.productOfLinear(constants(range(p), p), p)
    assert residueRoots(P) == constants(range(p), p)

    u = RationalFunction.generator(p, "u")
    Q = ResiduePolynomial.linear(-u) * ResiduePolynomial.linear(1/u)  # (T - u)(T + 1/u)
    assert residueRoots(Q) == sorted([u, -1/u], key=RationalFunction.sortKey)

    with pytest.raises(ZeroPolynomial):
        residueRoots(P - P)
