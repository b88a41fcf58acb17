"""
Polynomials in T over the residue field E ⊂ F_p(u), and the search for their roots in E.
"""
from typing import Tuple, List, Iterable, Optional
from dataclasses import dataclass
import itertools

from .polynomials import polyFactor, monicDivisors, polyMul, polyQuo, polyGcd, polyDegree
from .ratfun import RationalFunction
from ..errors import RootsNotFound, ZeroPolynomial


@dataclass(frozen=True)
class ResiduePolynomial:
    """Coefficients lowest degree first, trailing zeros stripped."""
    p: int
    coefficients: Tuple[RationalFunction, ...]
    variable: str = "u"

    @staticmethod
    def create(coefficients: Iterable[RationalFunction], p: int, variable: str="u") -> "ResiduePolynomial":
        coefficients = list(coefficients)
        while coefficients and coefficients[-1].isZero():
            coefficients.pop()
        return ResiduePolynomial(p, tuple(coefficients), variable)

    @staticmethod
    def constant(c: RationalFunction) -> "ResiduePolynomial":
        return ResiduePolynomial.create([c], c.p, c.variable)

    @staticmethod
    def linear(shift: RationalFunction) -> "ResiduePolynomial":
        """T + shift."""
        return ResiduePolynomial.create([shift, RationalFunction.constant(1, shift.p, shift.variable)], shift.p, shift.variable)

    @staticmethod
    def productOfLinear(shifts: Iterable[RationalFunction], p: int, variable: str="u") -> "ResiduePolynomial":
        """∏ (T + s)."""
        result = ResiduePolynomial.constant(RationalFunction.constant(1, p, variable))
        for s in shifts:
            result = result * ResiduePolynomial.linear(s)
        return result

    def _zero(self) -> RationalFunction:
        return RationalFunction.constant(0, self.p, self.variable)

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> RationalFunction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else self._zero()

    def __add__(self, other: "ResiduePolynomial") -> "ResiduePolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return ResiduePolynomial.create([self.coefficient(k) + other.coefficient(k) for k in range(n)], self.p, self.variable)

    def __neg__(self) -> "ResiduePolynomial":
        return ResiduePolynomial(self.p, tuple(-c for c in self.coefficients), self.variable)

    def __sub__(self, other: "ResiduePolynomial") -> "ResiduePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "ResiduePolynomial":
        if not isinstance(other, ResiduePolynomial):
            return ResiduePolynomial.create([c*other for c in self.coefficients], self.p, self.variable)
        if not self.coefficients or not other.coefficients:
            return ResiduePolynomial(self.p, (), self.variable)
        product = [self._zero()]*(len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a.isZero():
                continue
            for j, b in enumerate(other.coefficients):
                if not b.isZero():
                    product[i+j] = product[i+j] + a*b
        return ResiduePolynomial.create(product, self.p, self.variable)

    __rmul__ = __mul__

    def evaluate(self, a: RationalFunction) -> RationalFunction:
        result = self._zero()
        for c in reversed(self.coefficients):
            result = result*a + c
        return result

    def compose(self, inner: "ResiduePolynomial") -> "ResiduePolynomial":
        """self(inner(T))."""
        result = ResiduePolynomial(self.p, (), self.variable)
        for c in reversed(self.coefficients):
            result = result*inner + ResiduePolynomial.constant(c)
        return result

    def isAdditive(self) -> bool:
        """Only monomials T^{p^k} occur."""
        additive_exponents = set()
        e = 1
        while e <= max(1, self.degree()):
            additive_exponents.add(e)
            e *= self.p
        return all(c.isZero() or k in additive_exponents for k, c in enumerate(self.coefficients))

    def linearCoefficient(self) -> RationalFunction:
        return self.coefficient(1)

    def toString(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k in range(len(self.coefficients)-1, -1, -1):
            c = self.coefficients[k]
            if c.isZero():
                continue
            monomial = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            text = c.toString()
            if not monomial:
                terms.append(text)
            elif c.isOne():
                terms.append(monomial)
            elif text == "-1":
                terms.append("-" + monomial)
            else:
                terms.append(f"({text})*{monomial}")
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self):
        return self.toString()


def residueRoots(polynomial: ResiduePolynomial, candidate_cap: int=20000, seed: int=0) -> List[RationalFunction]:
    """
    Distinct roots in F_p(u) of a nonzero polynomial over F_p(u), by the rational root theorem: after clearing
    denominators, a root a/b (coprime, b monic) has a | lowest coefficient and b | leading coefficient.
    """
    if not polynomial.coefficients:
        raise ZeroPolynomial("Every element is a root of the zero polynomial.")
    p, variable = polynomial.p, polynomial.variable

    # Clear denominators.
    common = (1,)
    for c in polynomial.coefficients:
        common = polyQuo(polyMul(common, c.denominator, p), polyGcd(common, c.denominator, p), p)
    cleared = [polyQuo(polyMul(c.numerator, common, p), c.denominator, p) for c in polynomial.coefficients]

    roots = []
    lowest = next(k for k, c in enumerate(cleared) if c)
    if lowest > 0:
        roots.append(RationalFunction.constant(0, p, variable))
    cleared = cleared[lowest:]
    if len(cleared) == 1:
        return roots

    numerators   = monicDivisors(polyFactor(cleared[0], p, seed), p)
    denominators = monicDivisors(polyFactor(cleared[-1], p, seed), p)
    if len(numerators)*len(denominators)*(p-1) > candidate_cap:
        raise RootsNotFound(f"Residual root search space too large ({len(numerators)*len(denominators)*(p-1)} candidates).")

    reduced = ResiduePolynomial.create([RationalFunction(p, c, (1,), variable) for c in cleared], p, variable)
    seen = set()
    for a, b, unit in itertools.product(numerators, denominators, range(1, p)):
        candidate = RationalFunction.normalize(a, b, p, variable) * unit
        if candidate in seen:
            continue
        seen.add(candidate)
        if reduced.evaluate(candidate).isZero():
            roots.append(candidate)

    roots.sort(key=RationalFunction.sortKey)
    return roots
