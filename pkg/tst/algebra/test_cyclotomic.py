import pytest

from ramcc.algebra.cyclotomic import CyclotomicInteger
from ramcc.algebra.primefield import PrimeField, primeField
from ramcc.errors import NonIntegralInnerProduct, UnsupportedPrime


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_roots_of_unity(q):
    zeta = CyclotomicInteger.zeta(q)
    assert zeta**q == CyclotomicInteger.fromInteger(1, q)
    assert zeta**(2*q + 1) == zeta
    assert zeta**0 == CyclotomicInteger.fromInteger(1, q)
    with pytest.raises(ValueError):
        zeta**-1

    total = CyclotomicInteger.zero(q)
    for k in range(q):
        total = total + CyclotomicInteger.zeta(q, k)
    assert total.isZero()


def test_embedding():
    assert CyclotomicInteger.zeta(3).embed(9) == CyclotomicInteger.zeta(9, 3)
    assert (CyclotomicInteger.zeta(9) + CyclotomicInteger.zeta(3)).order == 9
    with pytest.raises(ValueError):
        CyclotomicInteger.zeta(4).embed(6)


def test_exact_division():
    a = CyclotomicInteger.fromPowerSeries([3, 6], 5)
    assert a.exactDivide(3) == CyclotomicInteger.fromPowerSeries([1, 2], 5)
    with pytest.raises(NonIntegralInnerProduct):
        a.exactDivide(2)
    assert CyclotomicInteger.fromInteger(-4, 3).rationalValue() == -4


def test_discrete_logarithms():
    for p in [2, 3, 5, 7, 11, 13]:
        F = primeField(p)
        for k in range(p - 1):
            assert F.discreteLog(pow(F.generator, k, p)) == k


def test_unsupported_primes():
    with pytest.raises(UnsupportedPrime):
        PrimeField(4)
    with pytest.raises(UnsupportedPrime):
        PrimeField(101)
