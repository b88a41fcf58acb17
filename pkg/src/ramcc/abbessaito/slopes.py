"""
Slope and central character decomposition of monomial representations.

Since G is a p-group, all of it is wild inertia. An irreducible constituent has slope 0 when it is trivial, slope c
when its restriction to G^c is nontrivial, and otherwise it factors through G/G^c, where the same question is asked
again one level down. At the level where a constituent becomes wild, G^c acts on it by a character χ̄: G^c → F_p
(after untwisting ψ₀), which is its central character.
"""
from typing import Dict, List, Tuple, Optional
from dataclasses import dataclass, field

from ..ramification.data import RamificationData
from ..ramification.characters import Character, VirtualRep, enumerateCharacters
from ..ramification.towers import Tower, projectCharacter
from ..config import Defaults
from ..errors import IntermediateFieldUnavailable


@dataclass(frozen=True, eq=False)
class CentralCharacter:
    data: RamificationData            # the level at which the slope equals the conductor.
    values: Tuple[Tuple[int, int], ...]  # (element of data.wild, χ̄ of it in F_p)
    slope: int

    def valueAt(self, sigma: int) -> int:
        return dict(self.values)[sigma]

    def kernel(self) -> List[int]:
        return [sigma for sigma, v in self.values if v == 0]

    def lifts(self) -> List[int]:
        """Elements τ with χ̄(τ) = 1."""
        return [sigma for sigma, v in self.values if v == 1]

    def key(self) -> Tuple:
        return (id(self.data), self.values)

    def __eq__(self, other):
        return isinstance(other, CentralCharacter) and self.key() == other.key()

    def __hash__(self):
        return hash(self.values)

    def toString(self) -> str:
        labels = ", ".join(f"{self.data.elementLabel(sigma)}↦{v}" for sigma, v in self.values if sigma != 0)
        return f"χ̄({labels})"

    def __repr__(self):
        return self.toString()


@dataclass
class SlopeDecomposition:
    dimension: int
    slots: Dict[int, List[Tuple[CentralCharacter, int]]] = field(default_factory=dict)
    slope0: int = 0

    def add(self, central: CentralCharacter, multiplicity: int):
        slot = self.slots.setdefault(central.slope, [])
        for i, (existing, m) in enumerate(slot):
            if existing == central:
                slot[i] = (existing, m + multiplicity)
                return
        slot.append((central, multiplicity))

    def prune(self) -> "SlopeDecomposition":
        for r in list(self.slots):
            self.slots[r] = [(central, m) for central, m in self.slots[r] if m != 0]
            if not self.slots[r]:
                del self.slots[r]
        return self

    def slopes(self) -> List[int]:
        return sorted(self.slots)

    def dimensionAt(self, r: int) -> int:
        if r == 0:
            return self.slope0
        return sum(m for _, m in self.slots.get(r, []))

    def wildDimension(self) -> int:
        return sum(self.dimensionAt(r) for r in self.slots)

    def isGenuine(self) -> bool:
        return self.slope0 >= 0 and all(m >= 0 for slot in self.slots.values() for _, m in slot)

    def toJson(self) -> dict:
        return {
            "dimension": self.dimension,
            "slope0": self.slope0,
            "slopes": [{"slope": r, "characters": [{"central": c.toString(), "multiplicity": m} for c, m in self.slots[r]]}
                       for r in self.slopes()]
        }


def _extensionsToGroup(theta: Character, group) -> List[Character]:
    """The characters χ of the (abelian) group with χ|_H = θ; by Frobenius reciprocity ind θ is their sum."""
    return [chi for chi in enumerateCharacters(group, order=theta.order)
            if all(chi.exponentAt(h) == e for h, e in zip(theta.subgroup, theta.exponents))]


def _decomposeTerm(theta: Character, multiplicity: int, D: RamificationData, tower: Tower, psi: int,
                   result: SlopeDecomposition):
    G = D.group
    whole = len(theta.subgroup) == len(G)
    contains_wild = set(D.wild) <= set(theta.subgroup)

    if whole and theta.isTrivial():
        result.slope0 += multiplicity
        return

    if contains_wild:
        if not theta.isTrivialOn(D.wild):
            reduced = theta.reduction(psi, D.wild, D.p)
            central = CentralCharacter(D, tuple(sorted(reduced.items())), D.conductor)
            result.add(central, multiplicity * theta.index())
            return
        # ind_H^G θ factors through G/G^c as ind_{H/G^c} of the projected character.
        quotient = tower.quotient(D, D.wild)
        _decomposeTerm(projectCharacter(theta, quotient), multiplicity, quotient.data, tower, psi, result)
        return

    if not G.isAbelian():
        raise IntermediateFieldUnavailable(f"ind from {list(theta.subgroup)}, which does not contain G^c, "
                                           f"cannot be split in the non-abelian group of {D.label}.")
    for chi in _extensionsToGroup(theta, G):
        _decomposeTerm(chi, multiplicity, D, tower, psi, result)


def decompose(rep: VirtualRep, D: RamificationData, tower: Optional[Tower]=None, psi: Optional[int]=None) -> SlopeDecomposition:
    tower = tower or Tower()
    psi = psi or Defaults.psiExponent()
    result = SlopeDecomposition(rep.dimension())
    for term in rep.terms:
        _decomposeTerm(term.character, term.multiplicity, D, tower, psi, result)
    result.prune()
    if result.slope0 + result.wildDimension() != result.dimension:
        raise ValueError(f"Slot dimensions of {rep} add up to {result.slope0 + result.wildDimension()}, not {result.dimension}.")
    return result


def slopeOfCharacter(theta: Character, D: RamificationData, tower: Optional[Tower]=None, psi: Optional[int]=None) -> int:
    """
    The slope of ind θ (θ itself for a character of G): 0 for the trivial character, otherwise the conductor of the
    first quotient L^{G^{c'}}/K on which it is wild.
    """
    decomposition = decompose(VirtualRep.fromCharacter(theta), D, tower, psi)
    slopes = ([0] if decomposition.slope0 else []) + decomposition.slopes()
    if len(slopes) != 1:
        raise ValueError(f"{theta} is spread over the slopes {slopes}.")
    return slopes[0]
