"""
Truncated Laurent series over F = F_p(x): the elements of K = F((t)) as far as we can know them.

A series stores its nonzero coefficients below its precision N; nothing is known about exponents ≥ N. Arithmetic
propagates precision pessimistically, and a series with no stored terms is *not* zero, only indistinguishable from zero.
"""
from typing import Dict, Tuple, Iterable, Union
from dataclasses import dataclass

from ..algebra.ratfun import RationalFunction
from ..errors import PrecisionExhausted

EXACT_PRECISION = 10**9  # Precision of literals that carry no O(t^N) term.


@dataclass(frozen=True)
class LaurentSeries:
    p: int
    terms: Tuple[Tuple[int, RationalFunction], ...]  # Sorted by exponent, all nonzero, all exponents < precision.
    precision: int

    @staticmethod
    def create(p: int, coefficients: Union[Dict[int, RationalFunction], Iterable[Tuple[int, RationalFunction]]], precision: int) -> "LaurentSeries":
        items = coefficients.items() if isinstance(coefficients, dict) else coefficients
        return LaurentSeries(p, tuple(sorted((k, c) for k, c in items if k < precision and not c.isZero())), precision)

    @staticmethod
    def zero(p: int, precision: int=EXACT_PRECISION) -> "LaurentSeries":
        return LaurentSeries(p, (), precision)

    @staticmethod
    def monomial(c: Union[int, RationalFunction], k: int, p: int, precision: int=EXACT_PRECISION) -> "LaurentSeries":
        if isinstance(c, int):
            c = RationalFunction.constant(c, p)
        return LaurentSeries.create(p, {k: c}, precision)

    @staticmethod
    def constant(c: Union[int, RationalFunction], p: int, precision: int=EXACT_PRECISION) -> "LaurentSeries":
        return LaurentSeries.monomial(c, 0, p, precision)

    def asDict(self) -> Dict[int, RationalFunction]:
        return dict(self.terms)

    def isExact(self) -> bool:
        return self.precision >= EXACT_PRECISION // 2

    def isEmpty(self) -> bool:
        """No known nonzero coefficient: zero up to precision."""
        return not self.terms

    def lowerBound(self) -> int:
        """A certified lower bound for the valuation."""
        return self.terms[0][0] if self.terms else self.precision

    def valuation(self) -> int:
        if not self.terms:
            raise PrecisionExhausted(f"Series is zero up to O(t^{self.precision}); its valuation cannot be certified.")
        return self.terms[0][0]

    def coefficient(self, k: int) -> RationalFunction:
        if k >= self.precision:
            raise PrecisionExhausted(f"Coefficient of t^{k} is unknown beyond O(t^{self.precision}).")
        for e, c in self.terms:
            if e == k:
                return c
            if e > k:
                break
        return RationalFunction.constant(0, self.p)

    def truncated(self, precision: int) -> "LaurentSeries":
        if precision >= self.precision:
            return self
        return LaurentSeries(self.p, tuple((k, c) for k, c in self.terms if k < precision), precision)

    ####################################################################################################################

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.constant(other, self.p)
        precision = min(self.precision, other.precision)
        if not other.terms:
            return self.truncated(precision)
        if not self.terms:
            return other.truncated(precision)
        merged = dict(self.truncated(precision).terms)
        for k, c in other.terms:
            if k >= precision:
                break
            merged[k] = merged[k] + c if k in merged else c
        return LaurentSeries.create(self.p, merged, precision)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.p, tuple((k, -c) for k, c in self.terms), self.precision)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            other = LaurentSeries.constant(other, self.p)
        return self + (-other)

    def __mul__(self, other: Union["LaurentSeries", RationalFunction, int]) -> "LaurentSeries":
        if not isinstance(other, LaurentSeries):
            return self.scaled(other)
        precision = min(self.precision + other.lowerBound(), other.precision + self.lowerBound())
        if not self.terms or not other.terms:
            return LaurentSeries(self.p, (), precision)

        product: Dict[int, RationalFunction] = dict()
        for i, a in self.terms:
            for j, b in other.terms:
                k = i + j
                if k >= precision:
                    break
                product[k] = product[k] + a*b if k in product else a*b
        return LaurentSeries.create(self.p, product, precision)

    __rmul__ = __mul__

    def scaled(self, c: Union[RationalFunction, int]) -> "LaurentSeries":
        if isinstance(c, int):
            c %= self.p
            if c == 1:
                return self
        if (isinstance(c, int) and c == 0) or (isinstance(c, RationalFunction) and c.isZero()):
            return LaurentSeries(self.p, (), self.precision)
        return LaurentSeries(self.p, tuple((k, a*c) for k, a in self.terms), self.precision)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by t^k."""
        if k == 0:
            return self
        precision = self.precision if self.isExact() else self.precision + k
        return LaurentSeries(self.p, tuple((e + k, c) for e, c in self.terms), precision)

    def __pow__(self, k: int) -> "LaurentSeries":
        result = LaurentSeries.constant(1, self.p)
        for _ in range(k):
            result = result * self
        return result

    def equalsToPrecision(self, other: "LaurentSeries") -> bool:
        return (self - other).isEmpty()

    def toString(self) -> str:
        parts = []
        for k, c in self.terms:
            text = c.toString()
            if k != 0 and len([a for a in c.numerator if a]) + (c.denominator != (1,)) > 1:
                text = f"({text})"
            if k == 0:
                parts.append(text)
            else:
                power = "t" if k == 1 else f"t^{k}"
                parts.append(power if text == "1" else ("-" + power if text == "-1" else f"{text}*{power}"))
        if not self.isExact():
            parts.append(f"O(t^{self.precision})")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    def __repr__(self):
        return self.toString()


def laurentValuation(s: LaurentSeries) -> int:
    return s.valuation()
