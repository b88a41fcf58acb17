"""
Exact elements of Z[ζ_q] in the power basis 1, ζ, ..., ζ^{φ(q)-1}, with big-integer coordinates.
"""
from typing import Tuple, List, Union
from dataclasses import dataclass
from functools import lru_cache

from sympy import cyclotomic_poly

from ..errors import NonIntegralInnerProduct


@lru_cache(maxsize=None)
def _modulus(q: int) -> Tuple[int, ...]:
    """Φ_q, lowest degree first."""
    return tuple(int(c) for c in reversed(cyclotomic_poly(q, polys=True).all_coeffs()))


def _reduce(coefficients: List[int], q: int) -> Tuple[int, ...]:
    phi = _modulus(q)
    degree = len(phi) - 1
    a = list(coefficients) + [0]*max(0, degree - len(coefficients))
    for k in range(len(a)-1, degree-1, -1):
        c = a[k]
        if c:
            for j in range(degree):
                a[k-degree+j] -= c*phi[j]
            a[k] = 0
    return tuple(a[:degree])


@lru_cache(maxsize=None)
def _zetaPowers(q: int) -> Tuple[Tuple[int, ...], ...]:
    return tuple(_reduce([0]*k + [1], q) for k in range(q))


@dataclass(frozen=True)
class CyclotomicInteger:
    order: int
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        if len(self.coefficients) != len(_modulus(self.order)) - 1:
            raise ValueError(f"Z[ζ_{self.order}] has rank {len(_modulus(self.order)) - 1}, got {len(self.coefficients)} coordinates.")

    @staticmethod
    def fromPowerSeries(coefficients: List[int], q: int) -> "CyclotomicInteger":
        """From Σ c_k ζ^k with any number of terms."""
        return CyclotomicInteger(q, _reduce(coefficients, q))

    @staticmethod
    def fromInteger(a: int, q: int) -> "CyclotomicInteger":
        return CyclotomicInteger(q, (int(a),) + (0,)*(len(_modulus(q)) - 2))

    @staticmethod
    def zero(q: int) -> "CyclotomicInteger":
        return CyclotomicInteger.fromInteger(0, q)

    @staticmethod
    def zeta(q: int, k: int=1) -> "CyclotomicInteger":
        return CyclotomicInteger(q, _zetaPowers(q)[k % q])

    def _coerce(self, other: Union[int, "CyclotomicInteger"]) -> "CyclotomicInteger":
        if isinstance(other, CyclotomicInteger):
            if other.order == self.order:
                return other
            if self.order % other.order == 0:
                return other.embed(self.order)
            raise ValueError(f"Cannot combine Z[ζ_{self.order}] with Z[ζ_{other.order}].")
        return CyclotomicInteger.fromInteger(int(other), self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return CyclotomicInteger(self.order, tuple(a+b for a,b in zip(self.coefficients, other.coefficients)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.order, tuple(-a for a in self.coefficients))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicInteger(self.order, tuple(other*a for a in self.coefficients))
        other = self._coerce(other)
        product = [0]*(2*len(self.coefficients))
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    product[i+j] += a*b
        return CyclotomicInteger.fromPowerSeries(product, self.order)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CyclotomicInteger":
        if k < 0:
            raise ValueError(f"Z[ζ_{self.order}] is not a field; cannot raise to the power {k}.")
        result = CyclotomicInteger.fromInteger(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def embed(self, order: int) -> "CyclotomicInteger":
        """View as an element of Z[ζ_order], using ζ_q = ζ_order^{order/q}."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"Z[ζ_{self.order}] does not embed in Z[ζ_{order}].")
        step = order // self.order
        spread = [0]*(step*len(self.coefficients))
        for i, a in enumerate(self.coefficients):
            spread[i*step] = a
        return CyclotomicInteger.fromPowerSeries(spread, order)

    def isZero(self) -> bool:
        return not any(self.coefficients)

    def isRational(self) -> bool:
        return not any(self.coefficients[1:])

    def rationalValue(self) -> int:
        if not self.isRational():
            raise ValueError(f"{self.toString()} is not a rational integer.")
        return self.coefficients[0]

    def exactDivide(self, m: int) -> "CyclotomicInteger":
        if any(a % m for a in self.coefficients):
            raise NonIntegralInnerProduct(f"{self.toString()} is not divisible by {m} in Z[ζ_{self.order}].")
        return CyclotomicInteger(self.order, tuple(a // m for a in self.coefficients))

    def modulo(self, m: int) -> "CyclotomicInteger":
        """Coordinates reduced into [0, m); the power basis is a Z-basis, so this computes the class mod m."""
        return CyclotomicInteger(self.order, tuple(a % m for a in self.coefficients))

    def isDivisibleBy(self, m: int) -> bool:
        return all(a % m == 0 for a in self.coefficients)

    def toJson(self) -> List[int]:
        return list(self.coefficients)

    def toString(self) -> str:
        terms = []
        for k, a in enumerate(self.coefficients):
            if a == 0:
                continue
            power = "" if k == 0 else ("ζ" if k == 1 else f"ζ^{k}")
            body = str(abs(a)) if not power else (power if abs(a) == 1 else f"{abs(a)}{power}")
            terms.append((" - " if a < 0 else " + ") + body if terms else ("-" if a < 0 else "") + body)
        return "".join(terms) if terms else "0"

    def __repr__(self):
        return self.toString()
