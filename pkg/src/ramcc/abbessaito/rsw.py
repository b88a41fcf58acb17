"""
Refined Swan conductors in closed form:

    rsw(χ) = -dā₀ ⊗ t^{-c} / ((∏_{σ∈G-G^c} u_σ)·f̄_{c,χ}(u_τ)^p)

for a central character χ̄ of G^c at conductor c, with f̄_{c,χ}(T) = ∏_{σ ∈ ker χ̄}(T + u_σ) and τ any lift of 1.
"""
from typing import Optional, Tuple
from dataclasses import dataclass

from ..algebra.ratfun import RationalFunction, embedInResidueField
from ..algebra.residuepoly import ResiduePolynomial
from ..algebra.differentials import DifferentialForm
from ..ramification.data import RamificationData
from .slopes import CentralCharacter
from ..errors import CharacterNotWild, IdentityViolated, InconsistentExtension


@dataclass(frozen=True)
class RefinedSwan:
    """form ⊗ t^{twist}, with the form a multiple of dx over F_p(u) of the top level."""
    form: DifferentialForm
    twist: int
    central: CentralCharacter

    def twisted(self) -> DifferentialForm:
        """rsw(χ) ⊗ t^c."""
        return self.form

    def toString(self) -> str:
        return f"{self.form.toString()} ⊗ t^{self.twist}"

    def toJson(self) -> dict:
        return {"form": self.form.toJson(), "twist": self.twist, "central": self.central.toString()}

    def __repr__(self):
        return self.toString()


def rswUnitFactor(central: CentralCharacter, tau: Optional[int]=None) -> Tuple[RationalFunction, RationalFunction]:
    """(∏_{σ∉G^c} u_σ, f̄_{c,χ}(u_τ)) at the level of the central character."""
    D = central.data
    lifts = central.lifts()
    if not lifts:
        raise CharacterNotWild(f"{central} is trivial on G^c.")
    if tau is None:
        tau = lifts[0]
    elif tau not in lifts:
        raise ValueError(f"{D.elementLabel(tau)} is not a lift of 1 through {central}.")
    value = D.kernelPolynomial(central.kernel()).evaluate(D.units[tau])
    return D.unitsOutside(D.wild), value


def factorisationCheck(central: CentralCharacter, tau: Optional[int]=None):
    """
    f̃(f̄_{c,χ}(T)) = f̄_c(T) with f̃(Y) = (∏_{σ∉G^c} u_σ)·(Y^p - w^{p-1}Y), w = f̄_{c,χ}(u_τ).
    """
    D = central.data
    outside, w = rswUnitFactor(central, tau)
    p = D.p
    zero = RationalFunction.constant(0, p, "u")
    outer = ResiduePolynomial.create([zero, -(w ** (p-1))] + [zero]*(p-2) + [RationalFunction.constant(1, p, "u")], p) * outside
    inner = D.kernelPolynomial(central.kernel())
    composed = outer.compose(inner)
    if composed != D.fbar:
        raise IdentityViolated("f̃∘f̄_{c,χ} = f̄_c", (composed.toString(), D.fbar.toString()))


def rswClosedForm(central: CentralCharacter, top: int, tau: Optional[int]=None, check: bool=True) -> RefinedSwan:
    """
    The refined Swan conductor of a central character, with its coefficient moved into F_p(u) of level `top`.
    With check=True the result is recomputed for every other lift of 1 and the factorisation of f̄_c is verified.
    """
    D = central.data
    outside, w = rswUnitFactor(central, tau)
    coefficient = -embedInResidueField(D.abar0Derivative(), D.n) / (outside * w ** D.p)
    if check:
        for other in central.lifts():
            _, w_other = rswUnitFactor(central, other)
            if w_other != w:
                raise IdentityViolated("f̄_{c,χ}(u_τ) is independent of the lift τ", (w.toString(), w_other.toString()))
        factorisationCheck(central, tau)
    if top < D.n:
        raise InconsistentExtension(f"Level {D.n} lies above the top level {top}.")
    coefficient = coefficient.inflate(D.p**(top - D.n), "u")
    return RefinedSwan(DifferentialForm(coefficient, 1), -central.slope, central)
