"""
Subextensions: L over an intermediate field L^H (restriction to H) and L^H over K (the quotient G/H), the latter
either by constructing a monogenic generator of L^H or from the quotient formulas on abstract data.
"""
from typing import Tuple, List, Dict, Sequence, Optional
from dataclasses import dataclass

from tktkt.util.printing import warn

from ..algebra.ratfun import RationalFunction, contractVariable
from ..fields.extension import ExtensionSpec, OrderElement
from ..fields.laurent import LaurentSeries
from .galois import GaloisGroup, GaloisElement, verifyConjugates
from .conjugates import findConjugates
from .data import RamificationData, buildRamificationData, ramificationData
from .characters import Character
from ..errors import IntermediateFieldUnavailable, InvalidExtension, RamccError


@dataclass
class Quotient:
    """Data of L^H/K with the projection G → G/H (indices into the respective groups)."""
    data: Optional[RamificationData]  # None when H = G.
    projection: Tuple[int, ...]
    subgroup: Tuple[int, ...]
    construction: str                 # "generator" or "abstract" or "trivial"
    generator: Optional[OrderElement] = None


def _log(p: int, m: int) -> int:
    k = 0
    while p**k < m:
        k += 1
    if p**k != m:
        raise ValueError(f"{m} is not a power of {p}.")
    return k


def subgroupGroup(group: GaloisGroup, subgroup: Sequence[int]) -> GaloisGroup:
    subgroup = sorted(subgroup)
    position = {old: new for new, old in enumerate(subgroup)}
    elements = [GaloisElement(new, group.elements[old].image, group.elements[old].jump, group.elements[old].label)
                for new, old in enumerate(subgroup)]
    table = [[position[group.multiply(a, b)] for b in subgroup] for a in subgroup]
    return GaloisGroup(elements, table)


def restrictedData(D: RamificationData, subgroup: Sequence[int]) -> RamificationData:
    """
    L/L^H. The residue field of L^H is F(h̄^{#H}) = F_p(u') with u' = u^{#H}; the returned data use "x" for u' and keep
    u, so that units, symbols and forms live in the same F_p(u) as those of D. The element order of the result is
    recorded in its origin, relative to D.
    """
    subgroup = tuple(sorted(subgroup))
    if not D.group.isSubgroup(subgroup):
        raise InvalidExtension(f"{list(subgroup)} is not a subgroup.")
    n_H = _log(D.p, len(subgroup))
    group = subgroupGroup(D.group, subgroup)
    abar0 = (-D.hbar).relabel("x")  # residue of ∏_{σ∈H}(-σ(h)) = -h̄^{#H}, as a function of u'
    data = buildRamificationData(group, [D.jumps[i] for i in subgroup], [D.units[i] for i in subgroup],
                                 D.p, n_H, abar0, D.hbar, spec=None, label=f"L/L^H, #H = {len(subgroup)}")
    data.origin = tuple(subgroup[i] for i in data.origin)
    return data


def restrictCharacter(theta: Character, DH: RamificationData) -> Character:
    """Move a character of H ⊂ G onto the group of restrictedData(D, H)."""
    return Character(DH.group, tuple(range(len(DH.group))), tuple(theta.exponentAt(old) for old in DH.origin), theta.order)


def abstractQuotient(D: RamificationData, subgroup: Sequence[int]) -> Quotient:
    """
    G/H with jumps Σ_{σ↦τ} v(h - σ(h)) and units ∏_{σ↦τ} u_σ, which are those of the generator h' = ∏_{σ∈H} σ(h)
    with h̄' = h̄^{#H}.
    """
    subgroup = tuple(sorted(subgroup))
    if len(subgroup) == len(D.group):
        return Quotient(None, tuple(0 for _ in D.group.elements), subgroup, "trivial")
    if not D.group.isNormal(subgroup):
        raise IntermediateFieldUnavailable(f"{list(subgroup)} is not normal, so L^H/K is not Galois.")

    G = D.group
    cosets = G.leftCosets(subgroup)
    coset_of = {g: k for k, coset in enumerate(cosets) for g in coset}
    table = [[coset_of[G.multiply(a[0], b[0])] for b in cosets] for a in cosets]
    elements = [GaloisElement(k, None, None, "{" + ",".join(D.elementLabel(g) for g in coset) + "}") for k, coset in enumerate(cosets)]
    quotient_group = GaloisGroup(elements, table)

    n_H = _log(D.p, len(subgroup))
    jumps: List[Optional[int]] = [None]
    units = [RationalFunction.constant(0, D.p, "u")]
    for coset in cosets[1:]:
        jumps.append(sum(D.jumps[g] for g in coset))
        unit = RationalFunction.constant(1, D.p, "u")
        for g in coset:
            unit = unit * D.units[g]
        units.append(contractVariable(unit, n_H, "u"))

    data = buildRamificationData(quotient_group, jumps, units, D.p, D.n - n_H, D.abar0, D.hbar, spec=None,
                                 label=f"L^H/K, #H = {len(subgroup)}")
    new_index = {old: new for new, old in enumerate(data.origin)}
    projection = tuple(new_index[coset_of[g]] for g in range(len(G)))
    return Quotient(data, projection, subgroup, "abstract")


def _embed(y: OrderElement, image_of_generator: OrderElement) -> OrderElement:
    """Σ c_i h'^i ∈ O_{L'} as an element of O_L, given h' ∈ O_L."""
    result = image_of_generator.spec.zero()
    for c in reversed(y.coordinates):
        result = result * image_of_generator + c
    return result


def _elementarySymmetric(values: List[OrderElement]) -> List[OrderElement]:
    """e_1, ..., e_k of the values."""
    spec = values[0].spec
    e = [spec.one()]
    for v in values:
        e = [e[0]] + [e[k] + e[k-1]*v for k in range(1, len(e))] + [e[-1]*v]
    return e[1:]


def _minimalPolynomialCoefficients(conjugates: List[OrderElement]) -> List[LaurentSeries]:
    """
    Coefficients a_0, ..., a_{k-1} of ∏ (T - c), which must lie in O_K, i.e. have vanishing h-coordinates.
    """
    e = _elementarySymmetric(conjugates)
    k = len(conjugates)
    coefficients = []
    for i in range(k):
        # a_i = (-1)^{k-i} e_{k-i}
        value = e[k-i-1] * (1 if (k-i) % 2 == 0 else -1)
        if not all(c.isEmpty() for c in value.coordinates[1:]):
            raise IntermediateFieldUnavailable("Candidate generator has a minimal polynomial outside O_K[T].")
        coefficients.append(value.coordinates[0])
    return coefficients


def intermediateField(D: RamificationData, subgroup: Sequence[int], seed: int=0) -> Quotient:
    """
    L^H/K through a monogenic generator h' of L^H. Candidates, in order: Σ_{σ∈H} σ(h), ∏_{σ∈H} σ(h), and the other
    elementary symmetric functions of the σ(h). A candidate is accepted when its residue has the right degree over F,
    its minimal polynomial gives a valid type (II) extension whose conjugates can be found, and the quotient jumps are
    the sums of the jumps over each coset.
    """
    subgroup = tuple(sorted(subgroup))
    if D.spec is None:
        raise IntermediateFieldUnavailable("No O_L model to construct L^H in; use the abstract quotient instead.")
    if len(subgroup) == len(D.group):
        return Quotient(None, tuple(0 for _ in D.group.elements), subgroup, "trivial")
    if not D.group.isNormal(subgroup):
        raise IntermediateFieldUnavailable(f"{list(subgroup)} is not normal, so L^H/K is not Galois.")

    G = D.group
    spec = D.spec
    n_quotient = D.n - _log(D.p, len(subgroup))
    cosets = G.leftCosets(subgroup)
    images = [G.elements[i].image for i in subgroup]

    symmetric = _elementarySymmetric(images)
    candidates = [symmetric[0], symmetric[-1]] + symmetric[1:-1]

    failures = []
    for candidate in candidates:
        try:
            residue = candidate.residue()
            q = D.p**n_quotient
            if not (residue ** q).isInflated(D.p**D.n) or (n_quotient > 0 and (residue ** (q // D.p)).isInflated(D.p**D.n)):
                raise IntermediateFieldUnavailable(f"residue {residue} does not generate a subfield of degree {q}")

            conjugates_in_L = [candidate.evaluateAt(G.elements[coset[0]].image) for coset in cosets]
            sub_spec = ExtensionSpec.create(D.p, n_quotient, _minimalPolynomialCoefficients(conjugates_in_L), spec.precision)
            roots = findConjugates(sub_spec, seed)
            sub_group = verifyConjugates(roots[0].spec, roots)
            sub_data = ramificationData(sub_group)

            # Projection: σ(h') equals the embedding of exactly one conjugate τ(h').
            embedded = [_embed(sub_data.group.elements[k].image, candidate) for k in range(len(sub_data.group))]
            projection = []
            for g in range(len(G)):
                image = candidate.evaluateAt(G.elements[g].image)
                match = next((k for k, e in enumerate(embedded) if (e - image).isZeroToPrecision()), None)
                if match is None:
                    raise IntermediateFieldUnavailable(f"σ_{g}(h') is not a conjugate of h' in L^H")
                projection.append(match)

            for k in range(1, len(sub_data.group)):
                expected = sum(D.jumps[g] for g in range(len(G)) if projection[g] == k)
                if sub_data.jumps[k] != expected:
                    raise IntermediateFieldUnavailable(f"quotient jump {sub_data.jumps[k]} differs from the coset sum {expected}")

            sub_data.label = f"L^H/K, #H = {len(subgroup)}"
            return Quotient(sub_data, tuple(projection), subgroup, "generator", candidate)
        except (RamccError, ValueError) as e:
            failures.append(str(e))
    raise IntermediateFieldUnavailable("No candidate generator of L^H worked: " + "; ".join(failures))


def quotientData(D: RamificationData, subgroup: Sequence[int], seed: int=0) -> Quotient:
    if D.spec is not None:
        return intermediateField(D, subgroup, seed)
    return abstractQuotient(D, subgroup)


def projectCharacter(chi: Character, quotient: Quotient) -> Character:
    """A character of G (or of H ⊇ ker) trivial on the kernel, as a character of the quotient group."""
    group = quotient.data.group
    values: Dict[int, int] = dict()
    for g, e in zip(chi.subgroup, chi.exponents):
        k = quotient.projection[g]
        if k in values and values[k] != e:
            raise ValueError("Character is not trivial on the kernel of the projection.")
        values[k] = e
    subgroup = tuple(sorted(values))
    return Character(group, subgroup, tuple(values[k] for k in subgroup), chi.order)


def inflateCharacter(phi: Character, quotient: Quotient, group: GaloisGroup, order: int) -> Character:
    """φ∘projection as a character of G, with values in μ_order."""
    step = order // phi.order
    return Character(group, tuple(range(len(group))),
                     tuple(phi.exponentAt(quotient.projection[g]) * step for g in range(len(group))), order)


class Tower:
    """
    Memoises the quotients of one extension and of its quotients, so the slope recursion constructs each
    intermediate field once. When no monogenic generator of L^H is found, the quotient falls back to the abstract
    formulas.
    """

    def __init__(self, seed: int=0, prefer_abstract: bool=False):
        self.seed = seed
        self.prefer_abstract = prefer_abstract
        self._cache: Dict[Tuple[int, Tuple[int, ...]], Quotient] = dict()
        self._keep: List[RamificationData] = []  # ids are only unique while the objects live.

    def quotient(self, D: RamificationData, subgroup: Sequence[int]) -> Quotient:
        key = (id(D), tuple(sorted(subgroup)))
        if key not in self._cache:
            self._keep.append(D)
            if self.prefer_abstract:
                self._cache[key] = abstractQuotient(D, subgroup)
            else:
                try:
                    self._cache[key] = quotientData(D, subgroup, self.seed)
                except IntermediateFieldUnavailable as e:
                    if D.spec is None:
                        raise
                    warn(f"Falling back to the abstract quotient of {D.label} by {list(subgroup)}: {e}")
                    self._cache[key] = abstractQuotient(D, subgroup)
        return self._cache[key]
