"""
Kato's Swan conductor with differential values and everything computed from it: s_G, the different, sw for
virtual representations, the rank-one closed form, the induction formula and kcc.
"""
from typing import List, Optional, Sequence

from ..algebra.ratfun import RationalFunction
from ..algebra.cyclotomic import CyclotomicInteger
from ..algebra.differentials import DifferentialForm
from ..fields.extension import differentViaDerivative
from ..ramification.data import RamificationData
from ..ramification.characters import Character, VirtualRep, InducedTerm, enumerateCharacters
from ..ramification.towers import Quotient, Tower, restrictedData, restrictCharacter, inflateCharacter
from ..interfaces.checks import CheckReport, compareValues
from ..config import Defaults
from ..errors import CharacterNotWild, IntegralityFailure, InvalidExtension
from .symbols import SymbolSum, GradedSymbol, CanonicalSymbolForm, dhSymbol, uniformizerSymbol, unitSymbol

DifferentialTensor = DifferentialForm


def _order(D: RamificationData, rep: Optional[VirtualRep]=None) -> int:
    q = D.group.exponent()
    return max(q, rep.order) if rep is not None else q


def sG(sigma: int, D: RamificationData, order: Optional[int]=None) -> SymbolSum:
    """
    s_G(σ) = [dh̄] - [h - σ(h)] for σ ≠ 1, with h - σ(h) = u_σ·t^{v} + ..., and s_G(1) = -Σ_{τ≠1} s_G(τ).
    """
    q = order or _order(D)
    if len(D.group) <= 1:
        raise InvalidExtension("s_G is undefined on the trivial group.")
    if sigma == D.group.identity():
        total = SymbolSum(D.p, q)
        for tau in range(1, len(D.group)):
            total = total + sG(tau, D, q)
        return -total
    return SymbolSum(D.p, q).add(1, dhSymbol(D.p)).add(-1, GradedSymbol(D.units[sigma], D.jumps[sigma], 0))


def katoDifferent(D: RamificationData) -> CanonicalSymbolForm:
    """d(L/K) = s_G(1)."""
    return sG(D.group.identity(), D).canonical(D.n)


def differentCheck(D: RamificationData) -> CheckReport:
    """
    f'(h) = ∏_{σ≠1}(h - σ(h)), so d(L/K) = [f'(h)] - (p^n - 1)[dh̄] when an O_L model is available.
    """
    if D.spec is None:
        return CheckReport("d(L/K) = [f'(h)] - (p^n - 1)[dh]", True, details={"skipped": "no O_L model"})
    v, unit = differentViaDerivative(D.spec)
    q = _order(D)
    expected = SymbolSum(D.p, q).add(1, GradedSymbol(unit, v, 0)).add(1 - D.degree(), dhSymbol(D.p)).canonical(D.n)
    return compareValues("d(L/K) = [f'(h)] - (p^n - 1)[dh]", katoDifferent(D), expected)


def epsilon(p: int, order: int, psi: int=1) -> SymbolSum:
    """ε(ξ) = Σ_{r ∈ F_p^×} [r]·ξ^r with ξ = ζ_order^{(order/p)·psi}."""
    if order % p:
        raise ValueError(f"ζ_{order} has no power of order {p}.")
    step = (order // p) * psi
    total = SymbolSum(p, order)
    for r in range(1, p):
        total.add(CyclotomicInteger.zeta(order, step*r), unitSymbol(r, p))
    return total


def sGCharacterSum(rep: VirtualRep, D: RamificationData) -> SymbolSum:
    """s_G(χ) = Σ_σ s_G(σ)·tr χ(σ) = Σ_{σ≠1} s_G(σ)·(tr χ(σ) - tr χ(1))."""
    if rep.group is not D.group:
        raise ValueError("The representation is not one of this extension's Galois group.")
    q = _order(D, rep)
    traces = rep.traces()
    total = SymbolSum(D.p, q)
    for sigma in range(1, len(D.group)):
        weight = traces[sigma] - traces[0]
        if not weight.isZero():
            total = total + sG(sigma, D, q).scaled(weight)
    return total


def sGCharacter(rep: VirtualRep, D: RamificationData) -> CanonicalSymbolForm:
    return sGCharacterSum(rep, D).canonical(D.n)


def _defect(rep: VirtualRep) -> CyclotomicInteger:
    """dim χ - ⟨χ, 1⟩."""
    return CyclotomicInteger.fromInteger(rep.dimension(), rep.order) - rep.innerWithTrivial()


def _swan(rep: VirtualRep, D: RamificationData, psi: int) -> CanonicalSymbolForm:
    q = _order(D, rep)
    return (sGCharacterSum(rep, D) + epsilon(D.p, q, psi).scaled(_defect(rep))).canonical(D.n)


def swanDiffval(rep: VirtualRep, D: RamificationData, psi: Optional[int]=None, check_shift: bool=True) -> CanonicalSymbolForm:
    """
    sw_ξ(χ) = s_G(χ) + (dim χ - ⟨χ,1⟩)·ε(ξ) with ξ = ψ₀(1), in canonical form.
    For p > 2 the result is also recomputed with ξ² and compared against the shift by (dim χ - ⟨χ,1⟩)·[2].
    """
    psi = psi or Defaults.psiExponent()
    sw = _swan(rep, D, psi)
    if check_shift and D.p > 2:
        xiShiftCheck(rep, D, 2, psi, sw).require()
    return sw


def xiShiftCheck(rep: VirtualRep, D: RamificationData, r: int=2, psi: Optional[int]=None,
                 sw: Optional[CanonicalSymbolForm]=None) -> CheckReport:
    """sw_{ξ^r}(χ) = sw_ξ(χ) + (dim χ - ⟨χ,1⟩)·[r]."""
    psi = psi or Defaults.psiExponent()
    if r % D.p == 0:
        raise ValueError(f"r = {r} is not a unit mod {D.p}.")
    if sw is None:
        sw = _swan(rep, D, psi)
    shifted = _swan(rep, D, psi*r % D.p)
    expected = sw + CanonicalSymbolForm.fromUnit(r, D.p, D.n, sw.order, _defect(rep))
    return compareValues(f"sw(ξ^{r}) = sw(ξ) + (dim - <χ,1>)[{r}]", shifted, expected, r=r)


def wildReduction(chi: Character, D: RamificationData, psi: int):
    """χ̄ on G^c, plus its kernel and a lift τ of 1."""
    if chi.isTrivialOn(D.wild):
        raise CharacterNotWild(f"{chi} is trivial on G^c.")
    chibar = chi.reduction(psi, D.wild, D.p)
    kernel = [sigma for sigma in D.wild if chibar[sigma] == 0]
    lifts = [sigma for sigma in D.wild if chibar[sigma] == 1]
    return chibar, kernel, lifts


def swanRank1Closed(chi: Character, D: RamificationData, psi: Optional[int]=None, tau: Optional[int]=None) -> CanonicalSymbolForm:
    """
    sw(χ) = [t^c] + [-f̄_{c,χ}(u_τ)^p] + Σ_{σ∉G^c}[u_σ] - [dā₀] for χ nontrivial on G^c, with f̄_{c,χ}(T) = ∏_{σ ∈ ker χ̄}(T + u_σ)
    and τ ∈ G^c a lift of 1 through χ̄. [dā₀] is p^n·[dh̄].
    """
    psi = psi or Defaults.psiExponent()
    if len(chi.subgroup) != len(D.group):
        raise ValueError("The closed form is for characters of the whole group.")
    chibar, kernel, lifts = wildReduction(chi, D, psi)
    if tau is None:
        tau = lifts[0]
    elif tau not in lifts:
        raise ValueError(f"σ_{tau} is not a lift of 1 through χ̄.")

    value = D.kernelPolynomial(kernel).evaluate(D.units[tau])
    unit = -(value ** D.p) * D.unitsOutside(D.wild)
    q = max(_order(D), chi.order)
    return SymbolSum(D.p, q).add(1, uniformizerSymbol(D.p, D.conductor))\
                            .add(1, unitSymbol(unit, D.p))\
                            .add(-D.degree(), dhSymbol(D.p)).canonical(D.n)


def rank1Check(chi: Character, D: RamificationData, psi: Optional[int]=None) -> CheckReport:
    rep = VirtualRep.fromCharacter(chi)
    return compareValues("sw by definition = rank-one closed form", swanDiffval(rep, D, psi), swanRank1Closed(chi, D, psi),
                         character=chi.toString())


########################################################################################################################


def _inductionCorrection(D: RamificationData, subgroup: Sequence[int], order: int) -> CanonicalSymbolForm:
    """Σ_{σ ∈ G-H} ([dh̄] - [h - σ(h)])."""
    members = set(subgroup)
    total = SymbolSum(D.p, order)
    for sigma in range(len(D.group)):
        if sigma not in members:
            total = total + sG(sigma, D, order)
    return total.canonical(D.n)


def swanOfInducedTerm(term: InducedTerm, D: RamificationData, psi: Optional[int]=None) -> CanonicalSymbolForm:
    """
    sw(ind_H^G θ) = [G:H]·(sw_H(θ) - Σ_{σ∈G-H}([dh̄] - [h - σ(h)])) + ([G:H] - 1)·⟨θ,1⟩_H·ε(ξ), with sw_H computed
    on L/L^H. For θ ≠ 1 the last term vanishes; for θ = 1 it accounts for ⟨ind θ, 1⟩ = 1.
    """
    psi = psi or Defaults.psiExponent()
    theta = term.character
    if len(theta.subgroup) == len(D.group):
        return swanDiffval(VirtualRep.fromCharacter(theta, term.multiplicity), D, psi)

    q = max(_order(D), theta.order)
    if len(theta.subgroup) == 1:
        swH = CanonicalSymbolForm.zero(D.p, D.n, q)
    else:
        DH = restrictedData(D, theta.subgroup)
        thetaH = restrictCharacter(theta, DH)
        swH = swanDiffval(VirtualRep.fromCharacter(thetaH), DH, psi).relevel(D.n)

    index = theta.index()
    result = (swH - _inductionCorrection(D, theta.subgroup, q)) * index
    if theta.isTrivial():
        result = result + epsilon(D.p, q, psi).canonical(D.n) * (index - 1)
    return result * term.multiplicity


def swanByInduction(rep: VirtualRep, D: RamificationData, psi: Optional[int]=None) -> CanonicalSymbolForm:
    total = CanonicalSymbolForm.zero(D.p, D.n, _order(D, rep))
    for term in rep.terms:
        total = total + swanOfInducedTerm(term, D, psi)
    return total


def inductionCheck(theta: Character, D: RamificationData, psi: Optional[int]=None) -> CheckReport:
    rep = VirtualRep.induced(theta)
    return compareValues("sw(ind θ) directly = induction formula", swanDiffval(rep, D, psi),
                         swanByInduction(rep, D, psi), subgroup=list(theta.subgroup), character=theta.toString())


########################################################################################################################


def integralityCheck(form: CanonicalSymbolForm) -> CheckReport:
    witness = form.integralityWitness()
    return CheckReport("sw lies in S_{K,L}", witness is None, form.toString(), "", {"witness": witness} if witness else {})


def kcc(rep: VirtualRep, D: RamificationData, psi: Optional[int]=None, route: str="definition") -> DifferentialForm:
    """
    Writes sw = [t^c] + [Δ′] - m[dā₀] and returns kcc = Δ′^{-1}·(dā₀)^{⊗m}. The route picks how sw is obtained:
    "definition" sums s_G over the whole group, "induction" goes through the subgroups the terms are induced from.
    """
    if route == "definition":
        sw = swanDiffval(rep, D, psi)
    elif route == "induction":
        sw = swanByInduction(rep, D, psi)
    else:
        raise ValueError(f"Unknown route '{route}'.")

    _, delta, m = sw.decomposeIntegral()
    expected = _defect(rep)
    if not expected.isRational() or expected.rationalValue() != m:
        raise IntegralityFailure(f"sw = {sw.toString()} has [dā₀]-coefficient {-m}, but dim - <χ,1> = {expected.toString()}.")
    return DifferentialForm(delta.inverse() * D.abar0Derivative() ** m, m)


########################################################################################################################


def transitUnit(quotient: RamificationData, D: RamificationData) -> RationalFunction:
    """
    ρ with [dh̄'] ↦ [ρ] + p^{n-n'}[dh̄]: the ratio of d h̄'/du' and d(h̄^{p^{n-n'}})/du', moved into F_p(u).
    """
    k = D.p**(D.n - quotient.n)
    ratio = quotient.hbar.derivative() / D.hbar.derivative().relabel(quotient.hbar.variable)
    return ratio.inflate(k, "u")


def transitForm(form: CanonicalSymbolForm, quotient: RamificationData, D: RamificationData) -> CanonicalSymbolForm:
    return form.transit(D.n, transitUnit(quotient, D))


def quotientCheck(D: RamificationData, quotient: Quotient, character_limit: int=32) -> List[CheckReport]:
    """
    s_{G/H}(τ) = Σ_{σ↦τ} s_G(σ) for every τ, and s_G(φ∘π) = s_{G/H}(φ) for the characters φ of G/H (up to a limit).
    """
    if quotient.data is None:
        return [CheckReport("quotient by G", True, details={"skipped": "trivial quotient"})]
    Q = quotient.data
    q = _order(D)
    reports = []
    for tau in range(len(Q.group)):
        left = transitForm(sG(tau, Q, q).canonical(Q.n), Q, D)
        right = SymbolSum(D.p, q)
        for sigma in range(len(D.group)):
            if quotient.projection[sigma] == tau:
                right = right + sG(sigma, D, q)
        reports.append(compareValues("s_G/H(τ) = Σ_{σ↦τ} s_G(σ)", left, right.canonical(D.n), tau=Q.elementLabel(tau)))

    if Q.group.isAbelian():
        for phi in enumerateCharacters(Q.group)[:character_limit]:
            left = transitForm(sGCharacter(VirtualRep.fromCharacter(phi), Q), Q, D)
            inflated = inflateCharacter(phi, quotient, D.group, q)
            right = sGCharacter(VirtualRep.fromCharacter(inflated), D)
            reports.append(compareValues("s_G(φ') = s_G/H(φ)", left, right, character=phi.toString()))
    return reports


def towerLawCheck(D: RamificationData, subgroup: Sequence[int], tower: Optional[Tower]=None) -> CheckReport:
    """d(L/K) = d(L/L^H) + d(L^H/K)."""
    tower = tower or Tower()
    subgroup = tuple(sorted(subgroup))
    quotient = tower.quotient(D, subgroup)

    right = CanonicalSymbolForm.zero(D.p, D.n, _order(D))
    if len(subgroup) > 1:
        right = right + katoDifferent(restrictedData(D, subgroup)).relevel(D.n)
    if quotient.data is not None:
        right = right + transitForm(katoDifferent(quotient.data), quotient.data, D)
    return compareValues("d(L/K) = d(L/L^H) + d(L^H/K)", katoDifferent(D), right, subgroup=list(subgroup),
                         construction=quotient.construction)


def descentInvariance(form: CanonicalSymbolForm, c: int) -> bool:
    """Whether the form is fixed by x ↦ x + c."""
    return form.shiftedVariable(c) == form
