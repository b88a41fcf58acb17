"""
The monogenic order O_L = O_K[h] = O_K[T]/(f) of a type (II) extension L/K, with its residue field E = F(h̄) realised
inside F_p(u), u^{p^n} = x.
"""
from typing import List, Optional, Sequence, Union, Tuple

from ..algebra.primefield import primeField
from ..algebra.ratfun import RationalFunction, pnThRoot, embedInResidueField, decomposeOverF
from ..algebra.linear import rank, inverseMatrix
from ..config import Defaults
from ..errors import InvalidExtension, NotIntegral, PrecisionExhausted
from .laurent import LaurentSeries

Scalar = Union[LaurentSeries, RationalFunction, int]


class ExtensionSpec:
    """
    f(T) = T^{p^n} + a_{p^n-1}T^{p^n-1} + ... + a_0 with integral a_i, whose residue is (T - h̄)^{p^n}.
    """

    def __init__(self, p: int, n: int, coefficients: Sequence[LaurentSeries], precision: int):
        self.p = p
        self.n = n
        self.degree = p**n
        self.precision = precision
        self.coefficients: Tuple[LaurentSeries, ...] = tuple(a if a.isExact() else a.truncated(precision) for a in coefficients)

        self.abar0 = self.coefficients[0].coefficient(0)
        self.hbar  = pnThRoot(-self.abar0, n)

        self._residue_powers: List[RationalFunction] = [RationalFunction.constant(1, p, "u")]
        for _ in range(1, self.degree):
            self._residue_powers.append(self._residue_powers[-1] * self.hbar)
        self._lifting_matrix = None

    @staticmethod
    def create(p: int, n: int, coefficients: Sequence[LaurentSeries], precision: Optional[int]=None) -> "ExtensionSpec":
        """
        Validates everything that makes f the minimal polynomial of a type (II) generator. The coefficients are
        a_0, ..., a_{p^n - 1}; the leading 1 is implicit.
        """
        primeField(p)
        if n < 1:
            raise InvalidExtension("The extension must be nontrivial (n ≥ 1).")
        if len(coefficients) != p**n:
            raise InvalidExtension(f"Expected {p**n} coefficients a_0 ... a_{p**n-1}, got {len(coefficients)}.")

        for i, a in enumerate(coefficients):
            if a.terms and a.terms[0][0] < 0:
                raise InvalidExtension(f"Coefficient a_{i} = {a.toString()} is not integral.")
        if precision is None:
            max_valuation = max((a.terms[0][0] for a in coefficients if a.terms), default=0)
            precision = Defaults.precisionRule(p, n, max_valuation)
        if precision <= 0:
            raise InvalidExtension("Precision must be positive.")

        abar0 = coefficients[0].truncated(precision).coefficient(0)
        if abar0.isZero():
            raise InvalidExtension("The residue of a_0 vanishes, so h̄ = 0 and E = F.")
        if abar0.derivative().isZero():
            raise InvalidExtension(f"The residue of a_0, {abar0.toString()}, is a p-th power in F; E/F would not be of degree p^n.")
        for i in range(1, p**n):
            if not coefficients[i].truncated(precision).coefficient(0).isZero():
                raise InvalidExtension(f"The residue of a_{i} is nonzero, so f̄ is not T^{p**n} + ā_0.")
        if all(coefficients[i].isEmpty() for i in range(1, p**n) if i % p):
            raise InvalidExtension("f is a polynomial in T^p, hence inseparable.")

        spec = ExtensionSpec(p, n, coefficients, precision)
        spec.checkResidueIndependence()
        return spec

    def withPrecision(self, precision: int) -> "ExtensionSpec":
        return ExtensionSpec.create(self.p, self.n, self.coefficients, precision)

    def maxCoefficientValuation(self) -> int:
        return max((a.terms[0][0] for a in self.coefficients if a.terms), default=0)

    def coefficientValuation(self, i: int) -> Optional[int]:
        """v(a_i), or None when a_i is zero to precision."""
        a = self.coefficients[i]
        return a.terms[0][0] if a.terms else None

    ####################################################################################################################

    def zero(self) -> "OrderElement":
        return OrderElement(self, tuple(LaurentSeries.zero(self.p) for _ in range(self.degree)))

    def one(self) -> "OrderElement":
        return self.fromSeries(LaurentSeries.constant(1, self.p))

    def h(self) -> "OrderElement":
        return self.monomialInH(1)

    def monomialInH(self, i: int) -> "OrderElement":
        if i < self.degree:
            return OrderElement(self, tuple(LaurentSeries.constant(int(j == i), self.p) for j in range(self.degree)))
        return self.h() ** i

    def fromSeries(self, s: LaurentSeries) -> "OrderElement":
        return OrderElement(self, (s,) + tuple(LaurentSeries.zero(self.p) for _ in range(self.degree - 1)))

    def fromCoordinates(self, coordinates: Sequence[LaurentSeries]) -> "OrderElement":
        if len(coordinates) != self.degree:
            raise ValueError(f"Expected {self.degree} coordinates, got {len(coordinates)}.")
        return OrderElement(self, tuple(coordinates))

    def residuePowers(self) -> List[RationalFunction]:
        """h̄^i for i < p^n."""
        return self._residue_powers

    def _residueMatrix(self):
        """Column i holds the F-coordinates of h̄^i in the basis 1, u, ..., u^{p^n-1}."""
        columns = [decomposeOverF(power, self.n) for power in self._residue_powers]
        return [[columns[j][i] for j in range(self.degree)] for i in range(self.degree)]

    def checkResidueIndependence(self):
        if rank(self._residueMatrix()) != self.degree:
            raise InvalidExtension("The residues of 1, h, ..., h^{p^n-1} are not F-linearly independent.")

    def liftResidue(self, e: RationalFunction) -> "OrderElement":
        """An element of O_L with residue e, with coordinates constant in t."""
        if self._lifting_matrix is None:
            self._lifting_matrix = inverseMatrix(self._residueMatrix())
        target = decomposeOverF(e, self.n)
        coordinates = []
        for row in self._lifting_matrix:
            y = RationalFunction.constant(0, self.p)
            for entry, b in zip(row, target):
                if not entry.isZero() and not b.isZero():
                    y = y + entry*b
            coordinates.append(LaurentSeries.constant(y, self.p))
        return OrderElement(self, tuple(coordinates))

    def evaluate(self, x: "OrderElement") -> "OrderElement":
        """f(x)."""
        result = self.one()
        for a in reversed(self.coefficients):
            result = result * x + a
        return result

    def evaluateDerivative(self, x: "OrderElement") -> "OrderElement":
        """f'(x)."""
        result = self.fromSeries(LaurentSeries.constant(self.degree % self.p, self.p))
        for i in range(self.degree - 1, 0, -1):
            result = result * x + self.coefficients[i].scaled(i)
        return result

    def toString(self) -> str:
        parts = [f"T^{self.degree}"]
        for i in range(self.degree - 1, -1, -1):
            a = self.coefficients[i]
            if a.isEmpty():
                continue
            monomial = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            parts.append(f"({a.toString()})" + (f"*{monomial}" if monomial else ""))
        return " + ".join(parts)

    def __repr__(self):
        return f"ExtensionSpec(p={self.p}, n={self.n}, f={self.toString()})"


class OrderElement:
    """
    Σ_i c_i h^i with c_i ∈ O_K, stored as p^n Laurent series.
    """

    __slots__ = ["spec", "coordinates"]

    def __init__(self, spec: ExtensionSpec, coordinates: Tuple[LaurentSeries, ...]):
        self.spec = spec
        self.coordinates = coordinates

    def _coerce(self, other) -> "OrderElement":
        if isinstance(other, OrderElement):
            if other.spec is not self.spec:
                raise ValueError("Elements of different orders cannot be combined.")
            return other
        if isinstance(other, LaurentSeries):
            return self.spec.fromSeries(other)
        return self.spec.fromSeries(LaurentSeries.constant(other, self.spec.p))

    def __add__(self, other) -> "OrderElement":
        if isinstance(other, LaurentSeries):
            return OrderElement(self.spec, (self.coordinates[0] + other,) + self.coordinates[1:])
        other = self._coerce(other)
        return OrderElement(self.spec, tuple(a + b for a, b in zip(self.coordinates, other.coordinates)))

    __radd__ = __add__

    def __neg__(self) -> "OrderElement":
        return OrderElement(self.spec, tuple(-a for a in self.coordinates))

    def __sub__(self, other) -> "OrderElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "OrderElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "OrderElement":
        if isinstance(other, (LaurentSeries, RationalFunction, int)):
            return OrderElement(self.spec, tuple(a * other for a in self.coordinates))
        other = self._coerce(other)

        d = self.spec.degree
        p = self.spec.p
        product: List[Optional[LaurentSeries]] = [None] * (2*d - 1)
        for i, a in enumerate(self.coordinates):
            for j, b in enumerate(other.coordinates):
                term = a * b
                product[i+j] = term if product[i+j] is None else product[i+j] + term

        # Reduce modulo f from the top: h^d = -Σ a_i h^i.
        for k in range(2*d - 2, d - 1, -1):
            c = product[k]
            if c.isEmpty() and c.isExact():
                continue
            for i, a_i in enumerate(self.spec.coefficients):
                product[k-d+i] = product[k-d+i] - c * a_i
        return OrderElement(self.spec, tuple(product[:d]))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "OrderElement":
        result = self.spec.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> "OrderElement":
        """Multiply by t^k."""
        return OrderElement(self.spec, tuple(a.shift(k) for a in self.coordinates))

    def precision(self) -> int:
        return min(a.precision for a in self.coordinates)

    def isZeroToPrecision(self) -> bool:
        return all(a.isEmpty() for a in self.coordinates)

    def equalsToPrecision(self, other: "OrderElement") -> bool:
        return (self - other).isZeroToPrecision()

    def lowerBound(self) -> int:
        return min(a.lowerBound() for a in self.coordinates)

    def valuation(self) -> int:
        """
        The minimum of the coordinate valuations: e = 1 and the residues of the basis are F-independent.
        """
        known = [a.terms[0][0] for a in self.coordinates if a.terms]
        if not known:
            raise PrecisionExhausted(f"Element is zero up to O(t^{self.precision()}).")
        v = min(known)
        if v >= self.precision():
            raise PrecisionExhausted(f"Valuation {v} is not below the precision {self.precision()} of every coordinate.")
        return v

    def residue(self) -> RationalFunction:
        for a in self.coordinates:
            if a.terms and a.terms[0][0] < 0:
                raise NotIntegral(f"Element has negative valuation {a.terms[0][0]}.")
        result = RationalFunction.constant(0, self.spec.p, "u")
        for a, power in zip(self.coordinates, self.spec.residuePowers()):
            c = a.coefficient(0)
            if not c.isZero():
                result = result + embedInResidueField(c, self.spec.n) * power
        return result

    def unitPart(self) -> Tuple[int, RationalFunction]:
        """(v, residue of self/t^v) for nonzero self."""
        v = self.valuation()
        return v, self.shift(-v).residue()

    def evaluateAt(self, x: "OrderElement") -> "OrderElement":
        """Substitute x for h in the coordinate polynomial."""
        result = self.spec.zero()
        for a in reversed(self.coordinates):
            result = result * x + a
        return result

    def toString(self) -> str:
        parts = []
        for i, a in enumerate(self.coordinates):
            if a.isEmpty():
                continue
            monomial = "" if i == 0 else ("h" if i == 1 else f"h^{i}")
            text = a.toString()
            parts.append(text if not monomial else (monomial if text == "1" else f"({text})*{monomial}"))
        return " + ".join(parts) if parts else f"O(t^{self.precision()})"

    def __repr__(self):
        return self.toString()


def orderMultiply(a: OrderElement, b: OrderElement) -> OrderElement:
    return a * b


def orderValuation(a: OrderElement) -> int:
    return a.valuation()


def residue(a: OrderElement) -> RationalFunction:
    return a.residue()


def applyAutomorphism(image_of_h: OrderElement, a: OrderElement) -> OrderElement:
    """σ(a) given σ(h)."""
    return a.evaluateAt(image_of_h)


def differentViaDerivative(spec: ExtensionSpec) -> Tuple[int, RationalFunction]:
    """(v(f'(h)), residue of f'(h)/t^v)."""
    return spec.evaluateDerivative(spec.h()).unitPart()
