"""
The prime field F_p. Elements are small dataclasses; the field itself is a shared context that knows its primitive
root and discrete logarithms, which the canonical form of symbols needs for the torsion of F_p^×.
"""
from typing import Dict, List, Union
from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime
from sympy.ntheory import primitive_root

from ..config import Defaults
from ..errors import UnsupportedPrime, DivisionByZero


@dataclass(frozen=True)
class PrimeFieldElement:
    p: int
    value: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other: Union["PrimeFieldElement", int]) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"Cannot mix F_{self.p} and F_{other.p}.")
            return other.value
        return int(other)

    def __add__(self, other):
        return PrimeFieldElement(self.p, self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.p, self.value - self._coerce(other))

    def __rsub__(self, other):
        return PrimeFieldElement(self.p, self._coerce(other) - self.value)

    def __neg__(self):
        return PrimeFieldElement(self.p, -self.value)

    def __mul__(self, other):
        return PrimeFieldElement(self.p, self.value * self._coerce(other))

    __rmul__ = __mul__

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.p}.")
        return PrimeFieldElement(self.p, pow(self.value, -1, self.p))

    def __truediv__(self, other):
        return self * PrimeFieldElement(self.p, self._coerce(other)).inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return PrimeFieldElement(self.p, pow(self.value, exponent, self.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


class PrimeField:

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not isprime(p):
            raise UnsupportedPrime(f"{p} is not a prime.")
        if p > Defaults.maximalPrime():
            raise UnsupportedPrime(f"Primes above {Defaults.maximalPrime()} are not supported (got {p}).")
        self.p = p
        self.generator = 1 if p == 2 else int(primitive_root(p))

        self._logs: Dict[int, int] = dict()
        power = 1
        for k in range(p-1):
            self._logs[power] = k
            power = power*self.generator % p

    def __call__(self, value: int) -> PrimeFieldElement:
        return PrimeFieldElement(self.p, value)

    def elements(self) -> List[PrimeFieldElement]:
        return [self(a) for a in range(self.p)]

    def units(self) -> List[PrimeFieldElement]:
        return [self(a) for a in range(1, self.p)]

    def discreteLog(self, a: Union[int, PrimeFieldElement]) -> int:
        """
        Index k in [0, p-1) with g^k = a for the fixed primitive root g.
        """
        a = int(a) % self.p
        if a == 0:
            raise DivisionByZero("0 has no discrete logarithm.")
        return self._logs[a]

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __repr__(self):
        return f"F_{self.p}"


@lru_cache(maxsize=None)
def primeField(p: int) -> PrimeField:
    return PrimeField(p)
