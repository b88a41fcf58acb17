"""
Kato's symbol groups with coefficients in Z[ζ_q].

A graded symbol [x] stands for x = unit·t^{e_π}·(dh̄)^{e_ω} in E⟨m_L/m_L², Ω¹_{E/F}⟩^×, written additively. Sums of
symbols are brought to a canonical form through unique factorisation in GF(p)[u]:

    Σ c·[x] = T·[g] + Σ_P c_P·[P] + c_π·[t] + c_ω·[dh̄]

with g the fixed generator of F_p^× (so T only matters modulo p-1), P running over monic irreducibles of GF(p)[u].
Two sums are equal iff their canonical forms are.
"""
from typing import Tuple, List, Dict, Union, Optional, Iterable
from dataclasses import dataclass
from functools import lru_cache

from ..algebra.polynomials import Poly, polyFactorWithUnit, polyShift, polyToString
from ..algebra.primefield import primeField
from ..algebra.ratfun import RationalFunction
from ..algebra.cyclotomic import CyclotomicInteger
from ..errors import DivisionByZero, IntegralityFailure, NonIntegerConductorPart

Coefficient = Union[int, CyclotomicInteger]


@lru_cache(maxsize=8192)
def _factored(f: Poly, p: int) -> Tuple[int, Tuple[Tuple[Poly, int], ...]]:
    lc, factors = polyFactorWithUnit(f, p)
    return lc, tuple(factors)


def unitFactorization(e: RationalFunction) -> Tuple[int, Dict[Poly, int]]:
    """
    e = g^k·∏ P^{e_P} for the generator g of F_p^×. Returns (k, {P: e_P}).
    """
    if e.isZero():
        raise DivisionByZero("[0] is not a symbol.")
    p = e.p
    lc_numerator, numerator = _factored(e.numerator, p)
    lc_denominator, denominator = _factored(e.denominator, p)
    exponents: Dict[Poly, int] = dict()
    for P, k in numerator:
        exponents[P] = exponents.get(P, 0) + k
    for P, k in denominator:
        exponents[P] = exponents.get(P, 0) - k
    constant = lc_numerator * pow(lc_denominator, -1, p) % p
    return primeField(p).discreteLog(constant), {P: k for P, k in exponents.items() if k}


@dataclass(frozen=True)
class GradedSymbol:
    unit: RationalFunction
    pi: int = 0
    omega: int = 0

    def __post_init__(self):
        if self.unit.isZero():
            raise DivisionByZero("A graded symbol needs a nonzero unit.")

    def __mul__(self, other: "GradedSymbol") -> "GradedSymbol":
        """[x] + [y] = [xy]."""
        return GradedSymbol(self.unit * other.unit, self.pi + other.pi, self.omega + other.omega)

    def toString(self) -> str:
        parts = []
        if not self.unit.isOne() or (self.pi == 0 and self.omega == 0):
            parts.append(self.unit.toString())
        if self.pi:
            parts.append("t" if self.pi == 1 else f"t^{self.pi}")
        if self.omega:
            parts.append("dh" if self.omega == 1 else f"dh^{self.omega}")
        return "[" + "·".join(parts) + "]"

    def __repr__(self):
        return self.toString()


def dhSymbol(p: int) -> GradedSymbol:
    return GradedSymbol(RationalFunction.constant(1, p, "u"), 0, 1)


def uniformizerSymbol(p: int, power: int=1) -> GradedSymbol:
    return GradedSymbol(RationalFunction.constant(1, p, "u"), power, 0)


def unitSymbol(unit: Union[int, RationalFunction], p: int) -> GradedSymbol:
    if isinstance(unit, int):
        unit = RationalFunction.constant(unit, p, "u")
    return GradedSymbol(unit)


class SymbolSum:
    """
    A formal Z[ζ_q]-combination of graded symbols. Nothing is simplified until canonical() is called.
    """

    def __init__(self, p: int, order: int, terms: Iterable[Tuple[CyclotomicInteger, GradedSymbol]]=()):
        self.p = p
        self.order = order
        self.terms: List[Tuple[CyclotomicInteger, GradedSymbol]] = []
        for c, symbol in terms:
            self.add(c, symbol)

    def _coefficient(self, c: Coefficient) -> CyclotomicInteger:
        if isinstance(c, int):
            return CyclotomicInteger.fromInteger(c, self.order)
        return c.embed(self.order)

    def add(self, c: Coefficient, symbol: GradedSymbol) -> "SymbolSum":
        self.terms.append((self._coefficient(c), symbol))
        return self

    def __add__(self, other: "SymbolSum") -> "SymbolSum":
        order = max(self.order, other.order)
        return SymbolSum(self.p, order, self.terms + other.terms)

    def __neg__(self) -> "SymbolSum":
        return SymbolSum(self.p, self.order, [(-c, s) for c, s in self.terms])

    def __sub__(self, other: "SymbolSum") -> "SymbolSum":
        return self + (-other)

    def scaled(self, c: Coefficient) -> "SymbolSum":
        order = self.order if isinstance(c, int) else max(self.order, c.order)
        result = SymbolSum(self.p, order)
        for d, s in self.terms:
            result.add(d.embed(order) * c, s)
        return result

    def __len__(self):
        return len(self.terms)

    def canonical(self, n: int) -> "CanonicalSymbolForm":
        form = CanonicalSymbolForm.zero(self.p, n, self.order)
        for c, symbol in self.terms:
            form = form + CanonicalSymbolForm.fromSymbol(symbol, n, self.order, c)
        return form

    def toString(self) -> str:
        return " + ".join(f"({c.toString()}){s.toString()}" for c, s in self.terms) or "0"

    def __repr__(self):
        return self.toString()


########################################################################################################################


def _zeroCoefficient(order: int) -> CyclotomicInteger:
    return CyclotomicInteger.zero(order)


@dataclass(frozen=True, eq=False)
class CanonicalSymbolForm:
    p: int
    n: int                                                  # level: the u of these symbols satisfies u^{p^n} = x.
    order: int
    torsion: CyclotomicInteger                              # coefficient of [g], modulo p - 1.
    factors: Tuple[Tuple[Poly, CyclotomicInteger], ...]     # sorted by (degree, coefficients), no zero coefficients.
    pi: CyclotomicInteger
    omega: CyclotomicInteger

    @staticmethod
    def create(p: int, n: int, order: int, torsion: CyclotomicInteger, factors: Dict[Poly, CyclotomicInteger],
               pi: CyclotomicInteger, omega: CyclotomicInteger) -> "CanonicalSymbolForm":
        return CanonicalSymbolForm(
            p=p, n=n, order=order,
            torsion=torsion.embed(order).modulo(p - 1),
            factors=tuple(sorted(((P, c.embed(order)) for P, c in factors.items() if not c.isZero()),
                                 key=lambda pair: (len(pair[0]), pair[0]))),
            pi=pi.embed(order),
            omega=omega.embed(order)
        )

    @staticmethod
    def zero(p: int, n: int, order: int) -> "CanonicalSymbolForm":
        z = _zeroCoefficient(order)
        return CanonicalSymbolForm.create(p, n, order, z, dict(), z, z)

    @staticmethod
    def fromSymbol(symbol: GradedSymbol, n: int, order: int, coefficient: Coefficient=1) -> "CanonicalSymbolForm":
        p = symbol.unit.p
        c = CyclotomicInteger.fromInteger(coefficient, order) if isinstance(coefficient, int) else coefficient.embed(order)
        k, exponents = unitFactorization(symbol.unit)
        return CanonicalSymbolForm.create(p, n, order, c*k, {P: c*e for P, e in exponents.items()}, c*symbol.pi, c*symbol.omega)

    @staticmethod
    def fromUnit(unit: Union[int, RationalFunction], p: int, n: int, order: int, coefficient: Coefficient=1) -> "CanonicalSymbolForm":
        return CanonicalSymbolForm.fromSymbol(unitSymbol(unit, p), n, order, coefficient)

    def embed(self, order: int) -> "CanonicalSymbolForm":
        if order == self.order:
            return self
        return CanonicalSymbolForm.create(self.p, self.n, order, self.torsion, dict(self.factors), self.pi, self.omega)

    def relevel(self, n: int) -> "CanonicalSymbolForm":
        """The same symbols regarded at another level of a tower sharing E and h."""
        return CanonicalSymbolForm(self.p, n, self.order, self.torsion, self.factors, self.pi, self.omega)

    def _align(self, other: "CanonicalSymbolForm") -> Tuple["CanonicalSymbolForm", "CanonicalSymbolForm"]:
        if other.p != self.p:
            raise ValueError(f"Cannot combine symbols of characteristic {self.p} and {other.p}.")
        if other.n != self.n:
            raise ValueError(f"Cannot combine symbols of level {self.n} and {other.n} without a transit.")
        order = max(self.order, other.order)
        return self.embed(order), other.embed(order)

    def __add__(self, other: "CanonicalSymbolForm") -> "CanonicalSymbolForm":
        a, b = self._align(other)
        factors = dict(a.factors)
        for P, c in b.factors:
            factors[P] = factors[P] + c if P in factors else c
        return CanonicalSymbolForm.create(a.p, a.n, a.order, a.torsion + b.torsion, factors, a.pi + b.pi, a.omega + b.omega)

    def __neg__(self) -> "CanonicalSymbolForm":
        return self * (-1)

    def __sub__(self, other: "CanonicalSymbolForm") -> "CanonicalSymbolForm":
        return self + (-other)

    def __mul__(self, c: Coefficient) -> "CanonicalSymbolForm":
        order = self.order if isinstance(c, int) else max(self.order, c.order)
        a = self.embed(order)
        if not isinstance(c, int):
            c = c.embed(order)
        return CanonicalSymbolForm.create(a.p, a.n, order, a.torsion * c, {P: e*c for P, e in a.factors}, a.pi * c, a.omega * c)

    __rmul__ = __mul__

    def isZero(self) -> bool:
        return self.torsion.isZero() and not self.factors and self.pi.isZero() and self.omega.isZero()

    def __eq__(self, other):
        if not isinstance(other, CanonicalSymbolForm):
            return NotImplemented
        try:
            return (self - other).isZero()
        except ValueError:
            return False

    def __hash__(self):
        return hash((self.p, self.n, self.factors and self.factors[0][0]))

    def factorCoefficient(self, P: Poly) -> CyclotomicInteger:
        for Q, c in self.factors:
            if Q == P:
                return c
        return _zeroCoefficient(self.order)

    ####################################################################################################################

    def transit(self, n: int, rho: RationalFunction) -> "CanonicalSymbolForm":
        """
        Image of a form of an intermediate level n' ≤ n in the symbols of level n: u' = u^{p^{n-n'}}, so an irreducible
        P(u') becomes P(u)^{p^{n-n'}}, and [dh̄'] becomes [ρ] + p^{n-n'}[dh̄] with ρ the given unit of level n.
        """
        if n < self.n:
            raise ValueError(f"Cannot transit from level {self.n} down to level {n}.")
        if n == self.n and rho.isOne():
            return self
        k = self.p**(n - self.n)
        lifted = CanonicalSymbolForm.create(self.p, n, self.order, self.torsion, {P: c*k for P, c in self.factors},
                                            self.pi, self.omega*k)
        if self.omega.isZero():
            return lifted
        return lifted + CanonicalSymbolForm.fromUnit(rho, self.p, n, self.order, self.omega)

    def shiftedVariable(self, c: int) -> "CanonicalSymbolForm":
        """Action of x ↦ x + c, which sends u to u + c and fixes t and dh̄."""
        return CanonicalSymbolForm.create(self.p, self.n, self.order, self.torsion,
                                          {polyShift(P, c, self.p): e for P, e in self.factors}, self.pi, self.omega)

    ####################################################################################################################

    def integralityWitness(self) -> Optional[str]:
        """
        None when the form lies in the image of (F^× ⊕ Z[t] ⊕ Z[dā₀]) ⊗ Z, i.e. all coefficients are rational integers,
        every irreducible appears with an exponent divisible by p^n, and the [dh̄] coefficient is in p^n·Z. Otherwise a
        description of the first offending term.
        """
        q = self.p**self.n
        if not self.torsion.isRational():
            return f"torsion coefficient {self.torsion.toString()} is not rational"
        for P, c in self.factors:
            if not c.isRational():
                return f"[{polyToString(P, self.p, 'u')}] has coefficient {c.toString()}"
            if c.rationalValue() % q:
                return f"[{polyToString(P, self.p, 'u')}] has coefficient {c.rationalValue()}, not divisible by {q}"
        if not self.pi.isRational():
            return f"[t] has coefficient {self.pi.toString()}"
        if not self.omega.isRational():
            return f"[dh] has coefficient {self.omega.toString()}"
        if self.omega.rationalValue() % q:
            return f"[dh] has coefficient {self.omega.rationalValue()}, not divisible by {q}"
        return None

    def isIntegral(self) -> bool:
        return self.integralityWitness() is None

    def decomposeIntegral(self) -> Tuple[int, RationalFunction, int]:
        """
        Write an integral form as [t^c] + [Δ′] - m[dā₀] with Δ′ ∈ F^× and return (c, Δ′, m).
        """
        witness = self.integralityWitness()
        if witness is not None:
            if not self.pi.isRational():
                raise NonIntegerConductorPart(witness)
            raise IntegralityFailure(witness)
        q = self.p**self.n
        F = primeField(self.p)
        delta = RationalFunction.constant(int(F.generator ** self.torsion.rationalValue()), self.p, "x")
        for P, c in self.factors:
            delta = delta * RationalFunction.fromPolynomial(P, self.p, "x") ** (c.rationalValue() // q)
        return self.pi.rationalValue(), delta, -self.omega.rationalValue() // q

    ####################################################################################################################

    def toJson(self) -> dict:
        return {
            "level": self.n,
            "order": self.order,
            "torsion": self.torsion.toJson(),
            "factors": [{"factor": polyToString(P, self.p, "u"), "coefficient": c.toJson()} for P, c in self.factors],
            "t": self.pi.toJson(),
            "dh": self.omega.toJson()
        }

    def toString(self) -> str:
        def term(c: CyclotomicInteger, body: str) -> str:
            s = c.toString()
            if s == "1":
                return body
            if s == "-1":
                return "-" + body
            return (f"({s})" if " " in s else s) + body

        terms = []
        if not self.torsion.isZero():
            terms.append(term(self.torsion, f"[{int(primeField(self.p).generator)}]"))
        for P, c in self.factors:
            terms.append(term(c, f"[{polyToString(P, self.p, 'u')}]"))
        if not self.pi.isZero():
            terms.append(term(self.pi, "[t]"))
        if not self.omega.isZero():
            terms.append(term(self.omega, "[dh]"))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return self.toString()
