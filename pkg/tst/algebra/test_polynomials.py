import pytest
import random

from ramcc.algebra.polynomials import toPoly, polyMul, polyPow, polyScale, polyFactorWithUnit, polyFactor, \
    polyToString, polyIsIrreducible, polyDerivative
from ramcc.errors import ZeroPolynomial


def _expand(lc: int, factors, p: int):
    product = (1,)
    for factor, multiplicity in factors:
        product = polyMul(product, polyPow(factor, multiplicity, p), p)
    return polyScale(product, lc, p)


@pytest.mark.parametrize("p, coefficients", [
    (2, [1, 0, 1, 1, 0, 1]),
    (3, [2, 0, 0, 0, 1]),
    (5, [1, 0, 0, 0, 0, -1]),
    (7, [3, 1, 4, 1, 5, 2, 6])
])
def test_factorisation_multiplies_back(p, coefficients):
    f = toPoly(coefficients, p)
    lc, factors = polyFactorWithUnit(f, p)
    assert _expand(lc, factors, p) == f
    for factor, _ in factors:
        assert factor[0] == 1
        assert polyIsIrreducible(factor, p)


def test_factorisation_is_sorted_and_seed_independent():
    p = 3
    f = toPoly([1, 0, 0, -1, 0, 0, 0, 0, 0, 0], p)  # x^9 - x^6 = x^6 (x - 1)^3
    first = polyFactor(f, p, seed=0)
    assert first == polyFactor(f, p, seed=17)
    assert first == [((1, 0), 6), ((1, 2), 3)]


def test_frobenius_fixed_points():
    p = 5
    factors = polyFactor(toPoly([1, 0, 0, 0, -1, 0], p), p)  # x^5 - x
    assert [factor for factor, _ in factors] == [(1, a) for a in range(p)]
    assert all(multiplicity == 1 for _, multiplicity in factors)


def test_zero_cannot_be_factored():
    with pytest.raises(ZeroPolynomial):
        polyFactorWithUnit((), 3)


def test_printing_uses_balanced_residues():
    assert polyToString(toPoly([1, 0, 2], 3), 3) == "x^2 - 1"
    assert polyToString(toPoly([1, 0, -1, 0], 3), 3, "T") == "T^3 - T"
    assert polyToString(toPoly([2, 1], 5), 5, "u") == "2*u + 1"
    assert polyToString((), 7) == "0"


def test_derivative_kills_pth_powers():
    p = 3
    assert polyDerivative(toPoly([1, 0, 0, 1], p), p) == ()
    assert polyDerivative(toPoly([1, 0, 1], p), p) == toPoly([2, 0], p)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_random_factorisations(p):
    rng = random.Random(p)
    for _ in range(125):
        degree = rng.randrange(1, 13)
        f = toPoly([rng.randrange(1, p)] + [rng.randrange(p) for _ in range(degree)], p)
        lc, factors = polyFactorWithUnit(f, p, seed=rng.randrange(1000))
        assert _expand(lc, factors, p) == f
