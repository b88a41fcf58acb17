"""
Galois groups of type (II) extensions, reconstructed from the conjugates of h and stored as a multiplication table.
"""
from typing import List, Optional, Tuple, Sequence, Iterable, FrozenSet
from dataclasses import dataclass
import itertools
import random
from math import lcm

from ..fields.extension import ExtensionSpec, OrderElement
from ..errors import NotARoot, NotClosed, InvalidExtension, IdentityViolated


@dataclass
class GaloisElement:
    index: int
    image: Optional[OrderElement]  # σ(h); None for groups given abstractly.
    jump: Optional[int]            # v(h - σ(h)); None for the identity.
    label: str = ""

    def isIdentity(self) -> bool:
        return self.jump is None


class GaloisGroup:
    """
    Elements are indexed 0..#G-1 with the identity at 0. table[i][j] is the index of σ_i∘σ_j.
    """

    def __init__(self, elements: List[GaloisElement], table: List[List[int]]):
        self.elements = elements
        self.table = table

        self._inverses = [next(j for j in range(len(elements)) if table[i][j] == 0) for i in range(len(elements))]

    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def identity(self) -> int:
        return 0

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self._inverses[i]

    def power(self, i: int, k: int) -> int:
        result = 0
        for _ in range(k % self.elementOrder(i)):
            result = self.table[result][i]
        return result

    def elementOrder(self, i: int) -> int:
        k, current = 1, i
        while current != 0:
            current = self.table[current][i]
            k += 1
        return k

    def exponent(self) -> int:
        result = 1
        for i in range(len(self)):
            k = self.elementOrder(i)
            result = lcm(result, k)
        return result

    def isAbelian(self) -> bool:
        return all(self.table[i][j] == self.table[j][i] for i in range(len(self)) for j in range(i))

    def generatedSubgroup(self, generators: Iterable[int]) -> Tuple[int, ...]:
        members = {0}
        frontier = [0]
        generators = list(generators)
        while frontier:
            current = frontier.pop()
            for g in generators:
                product = self.table[current][g]
                if product not in members:
                    members.add(product)
                    frontier.append(product)
        return tuple(sorted(members))

    def isSubgroup(self, subset: Sequence[int]) -> bool:
        members = set(subset)
        return 0 in members and all(self.table[a][b] in members for a in members for b in members)

    def isNormal(self, subgroup: Sequence[int]) -> bool:
        members = set(subgroup)
        return all(self.table[self.table[g][h]][self.inverse(g)] in members for g in range(len(self)) for h in members)

    def leftCosets(self, subgroup: Sequence[int]) -> List[Tuple[int, ...]]:
        """The cosets gH, each sorted, ordered by their smallest element."""
        seen = set()
        cosets = []
        for g in range(len(self)):
            if g in seen:
                continue
            coset = tuple(sorted(self.table[g][h] for h in subgroup))
            seen.update(coset)
            cosets.append(coset)
        return cosets

    def subgroupsContaining(self, base: Sequence[int]) -> List[Tuple[int, ...]]:
        """
        Every subgroup containing the base, found by adjoining one element at a time to the subgroups found so far.
        """
        start = self.generatedSubgroup(base)
        found = {start}
        frontier = [start]
        while frontier:
            current = frontier.pop()
            for g in range(len(self)):
                if g in current:
                    continue
                larger = self.generatedSubgroup(current + (g,))
                if larger not in found:
                    found.add(larger)
                    frontier.append(larger)
        return sorted(found, key=lambda s: (len(s), s))

    def checkAxioms(self, samples: int=200, seed: int=0):
        n = len(self)
        for i in range(n):
            if self.table[0][i] != i or self.table[i][0] != i:
                raise IdentityViolated("identity law", i)
            if sorted(self.table[i]) != list(range(n)):
                raise IdentityViolated("latin square property", i)
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]:
                raise IdentityViolated("associativity", (a, b, c))

    def reordered(self, order: Sequence[int]) -> "GaloisGroup":
        """The same group with element order[k] moved to position k."""
        position = {old: new for new, old in enumerate(order)}
        elements = []
        for new, old in enumerate(order):
            e = self.elements[old]
            elements.append(GaloisElement(new, e.image, e.jump, e.label))
        table = [[position[self.table[old_i][old_j]] for old_j in order] for old_i in order]
        return GaloisGroup(elements, table)

    def __repr__(self):
        return f"GaloisGroup(order={len(self)})"


def _sameElement(a: OrderElement, b: OrderElement) -> bool:
    for x, y in zip(a.coordinates, b.coordinates):
        if not (x - y).isEmpty():
            return False
    return True


def verifyConjugates(spec: ExtensionSpec, roots: List[OrderElement]) -> GaloisGroup:
    """
    Checks that the given elements are p^n distinct roots of f, the first being h, closed under composition, and
    returns the group they form.
    """
    if len(roots) != spec.degree:
        raise InvalidExtension(f"Expected {spec.degree} conjugates, got {len(roots)}.")
    if not _sameElement(roots[0], spec.h()):
        raise NotARoot(0, "the first conjugate must be h itself")
    for i, root in enumerate(roots):
        if not spec.evaluate(root).isZeroToPrecision():
            raise NotARoot(i, f"f({root.toString()}) does not vanish")
    for i, j in itertools.combinations(range(len(roots)), 2):
        if (roots[i] - roots[j]).isZeroToPrecision():
            raise NotClosed((i, j), "duplicate conjugates")

    elements = [GaloisElement(0, roots[0], None)]
    for i in range(1, len(roots)):
        elements.append(GaloisElement(i, roots[i], (roots[0] - roots[i]).valuation()))

    powers = []
    for root in roots:
        row = [spec.one()]
        for _ in range(1, spec.degree):
            row.append(row[-1] * root)
        powers.append(row)

    table = []
    for i in range(len(roots)):
        row = []
        for j, tau in enumerate(roots):
            image = spec.zero()
            for c, power in zip(tau.coordinates, powers[i]):
                if not c.isEmpty() or not c.isExact():
                    image = image + power * c
            match = next((m for m, candidate in enumerate(roots) if _sameElement(image, candidate)), None)
            if match is None:
                raise NotClosed((i, j), "σ_i∘σ_j(h) is not among the conjugates")
            row.append(match)
        table.append(row)

    group = GaloisGroup(elements, table)
    group.checkAxioms()
    return group
