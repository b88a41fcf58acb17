"""
Tensor powers of the one-dimensional module Ω¹_F = F·dx, and their base change to F_p(u).
"""
from typing import Dict, Union
from dataclasses import dataclass

from .polynomials import polyToString
from .ratfun import RationalFunction, embedInResidueField, isInBaseField, contractVariable


@dataclass(frozen=True)
class DifferentialForm:
    """
    coefficient·(dx)^{⊗power}. Power 0 is a scalar; negative powers live in the dual.
    """
    coefficient: RationalFunction
    power: int = 1
    basis: str = "dx"

    @staticmethod
    def scalar(c: Union[int, RationalFunction], p: int, variable: str="x") -> "DifferentialForm":
        if isinstance(c, int):
            c = RationalFunction.constant(c, p, variable)
        return DifferentialForm(c, 0)

    def __mul__(self, other: Union["DifferentialForm", RationalFunction, int]) -> "DifferentialForm":
        if isinstance(other, DifferentialForm):
            if other.basis != self.basis:
                raise ValueError(f"Cannot tensor {self.basis} with {other.basis}.")
            return DifferentialForm(self.coefficient * other.coefficient, self.power + other.power, self.basis)
        return DifferentialForm(self.coefficient * other, self.power, self.basis)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["DifferentialForm", RationalFunction, int]) -> "DifferentialForm":
        if isinstance(other, DifferentialForm):
            return self * other.inverse()
        return DifferentialForm(self.coefficient / other, self.power, self.basis)

    def __pow__(self, k: int) -> "DifferentialForm":
        return DifferentialForm(self.coefficient ** k, self.power * k, self.basis)

    def inverse(self) -> "DifferentialForm":
        return DifferentialForm(self.coefficient.inverse(), -self.power, self.basis)

    def isZero(self) -> bool:
        return self.coefficient.isZero()

    def baseChanged(self, n: int) -> "DifferentialForm":
        """Same form, coefficient moved into F_p(u)."""
        if self.coefficient.variable == "u":
            return self
        return DifferentialForm(embedInResidueField(self.coefficient, n), self.power, self.basis)

    def isRational(self, n: int) -> bool:
        """Whether the coefficient lies in F."""
        return self.coefficient.variable == "x" or isInBaseField(self.coefficient, n)

    def descended(self, n: int) -> "DifferentialForm":
        if self.coefficient.variable == "x":
            return self
        return DifferentialForm(contractVariable(self.coefficient, n, "x"), self.power, self.basis)

    def toString(self) -> str:
        c = self.coefficient.toString()
        if self.power == 0:
            return c
        basis = self.basis if self.power == 1 else f"({self.basis})^{self.power}"
        if self.coefficient.isOne():
            return basis
        if c == "-1":
            return "-" + basis
        if len([a for a in self.coefficient.numerator if a]) > 1 and self.coefficient.denominator == (1,):
            c = f"({c})"
        return f"{c}*{basis}"

    def toJson(self) -> Dict[str, Union[str, int]]:
        p, variable = self.coefficient.p, self.coefficient.variable
        return {
            "numerator":   polyToString(self.coefficient.numerator, p, variable),
            "denominator": polyToString(self.coefficient.denominator, p, variable),
            "power": self.power
        }

    def __repr__(self):
        return self.toString()


def differential(f: RationalFunction) -> DifferentialForm:
    """d: F → Ω¹_F, f ↦ (df/dx)·dx."""
    return DifferentialForm(f.derivative(), 1)
