"""
One-dimensional characters of subgroups of G with values in μ_q (q the exponent of G), and the virtual
representations built from them by induction.
"""
from typing import Tuple, List, Dict, Optional, Sequence, Iterable
from dataclasses import dataclass
import itertools

from sympy import primefactors

from ..algebra.cyclotomic import CyclotomicInteger
from .galois import GaloisGroup
from ..errors import NonIntegralInnerProduct, InvalidExtension


@dataclass(frozen=True, eq=False)
class Character:
    """χ(subgroup[k]) = ζ_q^{exponents[k]}."""
    group: GaloisGroup
    subgroup: Tuple[int, ...]
    exponents: Tuple[int, ...]
    order: int

    def __post_init__(self):
        if len(self.subgroup) != len(self.exponents):
            raise ValueError("One exponent per subgroup element is needed.")

    def exponentAt(self, i: int) -> int:
        return self.exponents[self.subgroup.index(i)]

    def value(self, i: int) -> CyclotomicInteger:
        return CyclotomicInteger.zeta(self.order, self.exponentAt(i))

    def index(self) -> int:
        """[G:H]."""
        return len(self.group) // len(self.subgroup)

    def isTrivial(self) -> bool:
        return not any(self.exponents)

    def isTrivialOn(self, subset: Iterable[int]) -> bool:
        return all(self.exponentAt(i) == 0 for i in subset)

    def conjugated(self, x: int) -> "Character":
        """θ^x(g) = θ(x^{-1} g x), a character of x H x^{-1}."""
        G = self.group
        x_inv = G.inverse(x)
        images = {G.multiply(G.multiply(x, h), x_inv): e for h, e in zip(self.subgroup, self.exponents)}
        subgroup = tuple(sorted(images))
        return Character(G, subgroup, tuple(images[g] for g in subgroup), self.order)

    def reduction(self, psi: int, subset: Sequence[int], p: int) -> Dict[int, int]:
        """
        The F_p-valued character χ̄ on a subset where χ takes p-th roots of unity: χ(σ) = ψ₀(χ̄(σ)) with
        ψ₀(1) = ζ_p^{psi}.
        """
        step = self.order // p
        inverse = pow(psi, -1, p)
        reduced = dict()
        for i in subset:
            e = self.exponentAt(i)
            if e % step:
                raise ValueError(f"χ({i}) = ζ_{self.order}^{e} is not a p-th root of unity.")
            reduced[i] = (e // step) * inverse % p
        return reduced

    def key(self) -> Tuple:
        return (self.subgroup, self.exponents)

    def __eq__(self, other):
        return isinstance(other, Character) and other.group is self.group and other.key() == self.key() and other.order == self.order

    def __hash__(self):
        return hash(self.key())

    def toString(self) -> str:
        return "[" + ", ".join(map(str, self.exponents)) + "]"

    def __repr__(self):
        return f"χ{self.toString()}" if len(self.subgroup) == len(self.group) else f"θ{self.toString()} on {list(self.subgroup)}"


def _generators(group: GaloisGroup, subgroup: Sequence[int]) -> List[int]:
    generators = []
    span = {0}
    for i in subgroup:
        if i not in span:
            generators.append(i)
            span = set(group.generatedSubgroup(generators))
    return generators


def enumerateCharacters(group: GaloisGroup, subgroup: Optional[Sequence[int]]=None, order: Optional[int]=None) -> List[Character]:
    """
    All one-dimensional characters of the subgroup, trivial one first, by trying every assignment of q-th roots of
    unity to a generating set and keeping the consistent ones.
    """
    subgroup = tuple(sorted(subgroup)) if subgroup is not None else tuple(range(len(group)))
    q = order or group.exponent()
    generators = _generators(group, subgroup)

    characters = []
    for assignment in itertools.product(range(q), repeat=len(generators)):
        values = {0: 0}
        frontier = [0]
        consistent = True
        while frontier and consistent:
            g = frontier.pop()
            for generator, e in zip(generators, assignment):
                product = group.multiply(g, generator)
                value = (values[g] + e) % q
                if product in values:
                    if values[product] != value:
                        consistent = False
                        break
                else:
                    values[product] = value
                    frontier.append(product)
        if consistent:
            # Every edge of the Cayley graph was checked when its source was expanded.
            characters.append(Character(group, subgroup, tuple(values[g] for g in subgroup), q))

    characters.sort(key=lambda chi: (not chi.isTrivial(), chi.exponents))
    return characters


def liftModularCharacter(group: GaloisGroup, subgroup: Sequence[int], values: Sequence[int], ell: int, root: int,
                         order: Optional[int]=None) -> Character:
    """
    Lift a character with values in F_ℓ^× to characteristic 0 by sending the chosen q-th root of unity `root` of F_ℓ
    to ζ_q; ℓ ≡ 1 mod q is required.
    """
    q = order or group.exponent()
    if (ell - 1) % q:
        raise InvalidExtension(f"F_{ell} has no primitive {q}-th root of unity.")
    if pow(root, q, ell) != 1 or any(pow(root, q // r, ell) == 1 for r in primefactors(q)):
        raise InvalidExtension(f"{root} is not a primitive {q}-th root of unity mod {ell}.")
    logs = {pow(root, e, ell): e for e in range(q)}
    exponents = []
    for a in values:
        if a % ell not in logs:
            raise InvalidExtension(f"{a} is not a {q}-th root of unity mod {ell}.")
        exponents.append(logs[a % ell])
    return Character(group, tuple(subgroup), tuple(exponents), q)


########################################################################################################################


@dataclass(frozen=True)
class InducedTerm:
    multiplicity: int
    character: Character  # θ on H = character.subgroup; the term is multiplicity·ind_H^G θ.


class VirtualRep:
    """
    A Z-combination of induced one-dimensional characters.
    """

    def __init__(self, group: GaloisGroup, terms: Iterable[InducedTerm]):
        self.group = group
        self.terms: Tuple[InducedTerm, ...] = tuple(terms)
        self.order = max([group.exponent()] + [term.character.order for term in self.terms])
        for term in self.terms:
            if term.character.group is not group:
                raise ValueError("All terms must be characters of subgroups of the same group.")

    @staticmethod
    def fromCharacter(character: Character, multiplicity: int=1) -> "VirtualRep":
        return VirtualRep(character.group, [InducedTerm(multiplicity, character)])

    @staticmethod
    def induced(character: Character, multiplicity: int=1) -> "VirtualRep":
        return VirtualRep.fromCharacter(character, multiplicity)

    @staticmethod
    def sum(reps: Sequence["VirtualRep"]) -> "VirtualRep":
        return VirtualRep(reps[0].group, [term for rep in reps for term in rep.terms])

    def __add__(self, other: "VirtualRep") -> "VirtualRep":
        return VirtualRep(self.group, self.terms + other.terms)

    def dimension(self) -> int:
        return sum(term.multiplicity * term.character.index() for term in self.terms)

    def isGenuine(self) -> bool:
        return all(term.multiplicity >= 0 for term in self.terms)

    def trace(self, g: int) -> CyclotomicInteger:
        """Σ m·tr(ind_H^G θ)(g), with the induced character formula over left coset representatives."""
        G = self.group
        total = CyclotomicInteger.zero(self.order)
        for term in self.terms:
            theta = term.character
            members = set(theta.subgroup)
            value = CyclotomicInteger.zero(self.order)
            for coset in G.leftCosets(theta.subgroup):
                x = coset[0]
                conjugate = G.multiply(G.multiply(G.inverse(x), g), x)
                if conjugate in members:
                    value = value + CyclotomicInteger.zeta(theta.order, theta.exponentAt(conjugate)).embed(self.order)
            total = total + value * term.multiplicity
        return total

    def traces(self) -> List[CyclotomicInteger]:
        return [self.trace(g) for g in range(len(self.group))]

    def innerWithTrivial(self) -> CyclotomicInteger:
        """⟨χ, 1⟩ = (1/#G) Σ tr χ(σ)."""
        total = CyclotomicInteger.zero(self.order)
        for value in self.traces():
            total = total + value
        try:
            return total.exactDivide(len(self.group))
        except NonIntegralInnerProduct:
            raise NonIntegralInnerProduct(f"Σ tr = {total.toString()} is not divisible by #G = {len(self.group)}.")

    def toString(self) -> str:
        parts = []
        for term in self.terms:
            theta = term.character
            body = theta.toString() if theta.index() == 1 else f"ind({list(theta.subgroup)}; {theta.toString()})"
            parts.append(f"{term.multiplicity}*{body}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.toString()
