"""
Abbes-Saito's characteristic cycle and its comparison with Kato's.
"""
from typing import Optional, List
from dataclasses import dataclass, field

from ..algebra.ratfun import RationalFunction, embedInResidueField
from ..algebra.differentials import DifferentialForm
from ..ramification.data import RamificationData
from ..ramification.characters import Character, VirtualRep
from ..ramification.towers import Tower, restrictedData, restrictCharacter
from ..kato.swan import kcc
from ..interfaces.checks import CheckReport, compareValues
from ..nearby.cycles import ordOfTensor
from ..config import Defaults
from ..errors import CharacterNotWild, MismatchWitness, InconsistentExtension
from .slopes import SlopeDecomposition, decompose
from .rsw import rswClosedForm


def ccWithDecomposition(rep: VirtualRep, D: RamificationData, tower: Optional[Tower]=None, psi: Optional[int]=None):
    decomposition = decompose(rep, D, tower, psi)
    coefficient = RationalFunction.constant(1, D.p, "u")
    power = 0
    for r in decomposition.slopes():
        for central, multiplicity in decomposition.slots[r]:
            twisted = rswClosedForm(central, D.n).twisted()
            coefficient = coefficient * twisted.coefficient ** multiplicity
            power += multiplicity
    return DifferentialForm(coefficient, power), decomposition


def cc(rep: VirtualRep, D: RamificationData, tower: Optional[Tower]=None, psi: Optional[int]=None) -> DifferentialForm:
    """
    ⊗_r ⊗_χ (rsw(χ) ⊗ t^r)^{dim M^{(r)}_χ}, as a coefficient in F_p(u) times (dx)^{⊗m} with m = dim M - dim M^{(0)}.
    """
    return ccWithDecomposition(rep, D, tower, psi)[0]


def hasseArfCheck(form: DifferentialForm, n: int) -> bool:
    """Whether cc lies in (Ω¹_F)^{⊗m} rather than only in its base change to F_p(u)."""
    return form.isRational(n)


def presentable(form: DifferentialForm, n: int) -> DifferentialForm:
    """The form over F when it is rational, otherwise as it is."""
    return form.descended(n) if form.isRational(n) else form


@dataclass
class ComparisonReport:
    representation: str
    cc: DifferentialForm
    kcc: DifferentialForm
    equal: bool
    hasse_arf: bool
    psi: int
    decomposition: Optional[SlopeDecomposition] = None
    checks: List[CheckReport] = field(default_factory=list)

    def toJson(self) -> dict:
        result = {
            "representation": self.representation,
            "cc": self.cc.toJson(),
            "kcc": self.kcc.toJson(),
            "equal": self.equal,
            "hasse_arf": self.hasse_arf,
            "psi": self.psi
        }
        if self.decomposition is not None:
            result["decomposition"] = self.decomposition.toJson()
        if self.checks:
            result["checks"] = [check.toJson() for check in self.checks]
        return result


def compareCcKcc(rep: VirtualRep, D: RamificationData, tower: Optional[Tower]=None, psi: Optional[int]=None,
                 route: str="definition", raise_on_mismatch: bool=True) -> ComparisonReport:
    """
    cc by the closed form per central character against kcc through canonical symbol forms.
    """
    psi = psi or Defaults.psiExponent()
    left, decomposition = ccWithDecomposition(rep, D, tower, psi)
    right = kcc(rep, D, psi, route).baseChanged(D.n)
    equal = left == right
    report = ComparisonReport(rep.toString(), presentable(left, D.n), presentable(right, D.n), equal,
                              hasseArfCheck(left, D.n), psi, decomposition)
    if not equal and raise_on_mismatch:
        raise MismatchWitness(report.cc.toString(), report.kcc.toString())
    return report


def ccInductionCheck(theta: Character, D: RamificationData, tower: Optional[Tower]=None, psi: Optional[int]=None) -> CheckReport:
    """
    cc(ind_H^G θ) = (κ_H / ∏_{σ∈G-H} u_σ)^{[G:H]} ⊗ (dā₀)^{⊗[G:H]}, where cc_H(θ) = κ_H·dā₀' on L/L^H.
    """
    psi = psi or Defaults.psiExponent()
    if not set(D.wild) <= set(theta.subgroup):
        raise ValueError(f"{list(theta.subgroup)} does not contain G^c.")
    if theta.isTrivialOn(D.wild):
        raise CharacterNotWild(f"{theta} is trivial on G^c.")

    left = cc(VirtualRep.induced(theta), D, tower, psi)
    index = theta.index()
    if index == 1:
        right = cc(VirtualRep.fromCharacter(theta), D, tower, psi)
    else:
        DH = restrictedData(D, theta.subgroup)
        ccH = cc(VirtualRep.fromCharacter(restrictCharacter(theta, DH)), DH, tower, psi)
        if ccH.power != 1:
            raise InconsistentExtension(f"cc of a character of H has power {ccH.power}, not 1.")
        kappa = ccH.coefficient / embedInResidueField(DH.abar0Derivative(), DH.n)  # cc_H = κ_H·dā₀'
        beyond = D.unitsOutside(theta.subgroup)
        abar0 = embedInResidueField(D.abar0Derivative(), D.n)
        right = DifferentialForm(((kappa / beyond) * abar0) ** index, index)
    return compareValues("cc(ind θ) = (κ_H/∏u)^[G:H] (dā₀)^[G:H]", presentable(left, D.n), presentable(right, D.n),
                         subgroup=list(theta.subgroup), character=theta.toString())


def psiIndependenceCheck(rep: VirtualRep, D: RamificationData, tower: Optional[Tower]=None, k: int=2) -> CheckReport:
    """ord of cc does not depend on ψ₀."""
    if D.p == 2:
        return CheckReport("ord cc is independent of ψ₀", True, details={"skipped": "F_2 has a single nontrivial ψ₀"})
    base = ordOfTensor(presentable(cc(rep, D, tower, 1), D.n), D.n)
    other = ordOfTensor(presentable(cc(rep, D, tower, k), D.n), D.n)
    return compareValues("ord cc is independent of ψ₀", base, other, psi=k)
