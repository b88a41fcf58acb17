"""
The rational function fields F = F_p(x) and F_p(u), u^{p^n} = x. The two are kept apart by a variable tag: a
rational function in u is never silently added to one in x.
"""
from typing import Tuple, List, Union
from dataclasses import dataclass

from .polynomials import Poly, toPoly, polyAdd, polySub, polyMul, polyNeg, polyQuo, polyGcd, polyMonic, polyPow, \
    polyDerivative, polyEval, polyShift, polyInflate, polyIsInflated, polyDeflate, polyTrailingZeros, polyScale, \
    polyToString, polyDegree
from ..errors import DivisionByZero, VariableMismatch, ZeroPolynomial

Scalar = Union[int, "RationalFunction"]


@dataclass(frozen=True)
class RationalFunction:
    """
    numerator/denominator with coprime parts and a monic denominator. Construct through normalize() unless both parts
    are already canonical.
    """
    p: int
    numerator: Poly
    denominator: Poly = (1,)
    variable: str = "x"

    @staticmethod
    def normalize(numerator: Poly, denominator: Poly, p: int, variable: str="x") -> "RationalFunction":
        numerator   = toPoly(numerator, p)
        denominator = toPoly(denominator, p)
        if not denominator:
            raise DivisionByZero("Denominator of a rational function cannot be 0.")
        if not numerator:
            return RationalFunction(p, (), (1,), variable)

        if polyDegree(denominator) > 0:
            g = polyGcd(numerator, denominator, p)
            if g != (1,):
                numerator   = polyQuo(numerator, g, p)
                denominator = polyQuo(denominator, g, p)
        lc, denominator = polyMonic(denominator, p)
        if lc != 1:
            numerator = polyScale(numerator, pow(lc, -1, p), p)
        return RationalFunction(p, numerator, denominator, variable)

    @staticmethod
    def constant(c: int, p: int, variable: str="x") -> "RationalFunction":
        return RationalFunction(p, toPoly([c], p), (1,), variable)

    @staticmethod
    def generator(p: int, variable: str="x") -> "RationalFunction":
        return RationalFunction(p, (1,0), (1,), variable)

    @staticmethod
    def fromPolynomial(f: Poly, p: int, variable: str="x") -> "RationalFunction":
        return RationalFunction(p, toPoly(f, p), (1,), variable)

    def _coerce(self, other: Scalar) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            if other.variable != self.variable:
                raise VariableMismatch(f"Cannot combine a function of {self.variable} with a function of {other.variable}.")
            if other.p != self.p:
                raise ValueError(f"Cannot combine functions over GF({self.p}) and GF({other.p}).")
            return other
        return RationalFunction.constant(int(other), self.p, self.variable)

    def _new(self, numerator: Poly, denominator: Poly) -> "RationalFunction":
        return RationalFunction.normalize(numerator, denominator, self.p, self.variable)

    ####################################################################################################################

    def __add__(self, other: Scalar) -> "RationalFunction":
        other = self._coerce(other)
        if not other.numerator:
            return self
        if not self.numerator:
            return other
        if self.denominator == other.denominator:
            if self.denominator == (1,):
                return RationalFunction(self.p, polyAdd(self.numerator, other.numerator, self.p), (1,), self.variable)
            return self._new(polyAdd(self.numerator, other.numerator, self.p), self.denominator)
        return self._new(polyAdd(polyMul(self.numerator, other.denominator, self.p),
                                 polyMul(other.numerator, self.denominator, self.p), self.p),
                         polyMul(self.denominator, other.denominator, self.p))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.p, polyNeg(self.numerator, self.p), self.denominator, self.variable)

    def __sub__(self, other: Scalar) -> "RationalFunction":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "RationalFunction":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "RationalFunction":
        other = self._coerce(other)
        if not self.numerator or not other.numerator:
            return RationalFunction(self.p, (), (1,), self.variable)
        if self.denominator == (1,) and other.denominator == (1,):
            return RationalFunction(self.p, polyMul(self.numerator, other.numerator, self.p), (1,), self.variable)

        # Cross-cancel so the result is already reduced.
        g1 = polyGcd(self.numerator, other.denominator, self.p)
        g2 = polyGcd(other.numerator, self.denominator, self.p)
        numerator = polyMul(polyQuo(self.numerator, g1, self.p), polyQuo(other.numerator, g2, self.p), self.p)
        denominator = polyMul(polyQuo(other.denominator, g1, self.p), polyQuo(self.denominator, g2, self.p), self.p)
        return RationalFunction(self.p, numerator, denominator, self.variable)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.numerator:
            raise DivisionByZero("0 has no inverse.")
        lc, numerator = polyMonic(self.numerator, self.p)
        return RationalFunction(self.p, polyScale(self.denominator, pow(lc, -1, self.p), self.p), numerator, self.variable)

    def __truediv__(self, other: Scalar) -> "RationalFunction":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "RationalFunction":
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RationalFunction.constant(1, self.p, self.variable)
        return RationalFunction(self.p, polyPow(self.numerator, k, self.p), polyPow(self.denominator, k, self.p), self.variable)

    ####################################################################################################################

    def isZero(self) -> bool:
        return not self.numerator

    def isOne(self) -> bool:
        return self.numerator == (1,) and self.denominator == (1,)

    def isConstant(self) -> bool:
        return len(self.numerator) <= 1 and self.denominator == (1,)

    def constantValue(self) -> int:
        if not self.isConstant():
            raise ValueError(f"{self} is not a constant.")
        return self.numerator[0] if self.numerator else 0

    def derivative(self) -> "RationalFunction":
        if self.denominator == (1,):
            return RationalFunction(self.p, polyDerivative(self.numerator, self.p), (1,), self.variable)
        n, d = self.numerator, self.denominator
        return self._new(polySub(polyMul(polyDerivative(n, self.p), d, self.p),
                                 polyMul(n, polyDerivative(d, self.p), self.p), self.p),
                         polyMul(d, d, self.p))

    def evaluate(self, a: int) -> int:
        d = polyEval(self.denominator, a, self.p)
        if d == 0:
            raise DivisionByZero(f"{self} has a pole at {a}.")
        return polyEval(self.numerator, a, self.p) * pow(d, -1, self.p) % self.p

    def shifted(self, c: int) -> "RationalFunction":
        """f(variable + c)."""
        return RationalFunction(self.p, polyShift(self.numerator, c, self.p), polyShift(self.denominator, c, self.p), self.variable)

    def orderAtZero(self) -> int:
        if not self.numerator:
            raise ZeroPolynomial("The zero function has no order at 0.")
        return polyTrailingZeros(self.numerator) - polyTrailingZeros(self.denominator)

    def relabel(self, variable: str) -> "RationalFunction":
        return RationalFunction(self.p, self.numerator, self.denominator, variable)

    def inflate(self, k: int, variable: str) -> "RationalFunction":
        """Substitute variable^k for the current variable and rename it."""
        return RationalFunction(self.p, polyInflate(self.numerator, k), polyInflate(self.denominator, k), variable)

    def isInflated(self, k: int) -> bool:
        return polyIsInflated(self.numerator, k) and polyIsInflated(self.denominator, k)

    def deflate(self, k: int, variable: str) -> "RationalFunction":
        return RationalFunction(self.p, polyDeflate(self.numerator, k), polyDeflate(self.denominator, k), variable)

    def sortKey(self) -> Tuple[Poly, Poly]:
        return (self.numerator, self.denominator)

    def toString(self) -> str:
        numerator = polyToString(self.numerator, self.p, self.variable)
        if self.denominator == (1,):
            return numerator
        denominator = polyToString(self.denominator, self.p, self.variable)
        wrap = lambda s, f: f"({s})" if len([c for c in f if c]) > 1 else s
        return wrap(numerator, self.numerator) + "/" + wrap(denominator, self.denominator)

    def __repr__(self):
        return self.toString()


def ratfunNormalize(numerator: Poly, denominator: Poly, p: int, variable: str="x") -> RationalFunction:
    return RationalFunction.normalize(numerator, denominator, p, variable)


def pnThRoot(f: RationalFunction, n: int) -> RationalFunction:
    """
    The p^n-th root of f ∈ F_p(x) inside F_p(u), u^{p^n} = x. Frobenius fixes the coefficients, so the root has the
    same coefficients with x renamed to u.
    """
    if n < 0:
        raise ValueError("n must be non-negative.")
    return f.relabel("u")


def embedInResidueField(f: RationalFunction, n: int) -> RationalFunction:
    """The inclusion F ⊂ F_p(u), x ↦ u^{p^n}."""
    return f.inflate(f.p**n, "u")


def isInBaseField(e: RationalFunction, n: int) -> bool:
    return e.isInflated(e.p**n)


def contractVariable(e: RationalFunction, k: int, variable: str="u") -> RationalFunction:
    """
    Express a function of u that only involves u^{p^k} as a function of u' = u^{p^k}.
    """
    if not e.isInflated(e.p**k):
        raise ValueError(f"{e} is not a function of {e.variable}^{e.p**k}.")
    return e.deflate(e.p**k, variable)


def decomposeOverF(e: RationalFunction, n: int) -> List[RationalFunction]:
    """
    Coordinates of e ∈ F_p(u) in the F-basis 1, u, ..., u^{p^n - 1}, as functions of x.

    With e = N/D we have D(u)^{p^n} = D(x), so e = N·D^{p^n-1}/D(x) and the numerator splits by exponent mod p^n.
    """
    p = e.p
    q = p**n
    numerator = polyMul(e.numerator, polyPow(e.denominator, q-1, p), p)
    denominator = RationalFunction.fromPolynomial(e.denominator, p, "x")

    low_first = list(reversed(numerator))
    coordinates = []
    for i in range(q):
        coefficients = low_first[i::q]
        part = toPoly(reversed(coefficients), p)
        coordinates.append(RationalFunction.fromPolynomial(part, p, "x") / denominator)
    return coordinates
