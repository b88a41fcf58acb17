"""
The ramification invariants of L/K read off from its Galois group: jumps v(h - σ(h)), the conductor c, the Herbrand
value ρ(c), the wild subgroup G^c, the additive map u on G^c and the reduction polynomial f̄_c.
"""
from typing import Tuple, Optional, List, Dict, Sequence
from dataclasses import dataclass, field
import itertools

from ..algebra.ratfun import RationalFunction, pnThRoot, embedInResidueField
from ..algebra.residuepoly import ResiduePolynomial
from ..fields.extension import ExtensionSpec
from .galois import GaloisGroup, GaloisElement
from ..errors import AdditivityViolation, InconsistentExtension, InvalidExtension, SpanConditionViolated, IdentityViolated


@dataclass
class RamificationData:
    p: int
    n: int
    group: GaloisGroup
    jumps: Tuple[Optional[int], ...]        # None for the identity.
    units: Tuple[RationalFunction, ...]     # u_σ in F_p(u); 0 for the identity.
    rho: int
    conductor: int
    wild: Tuple[int, ...]                   # G^c, identity included.
    s: int
    fbar: ResiduePolynomial
    abar0: RationalFunction
    hbar: RationalFunction
    spec: Optional[ExtensionSpec] = None
    origin: Tuple[int, ...] = ()            # origin[k] = index of element k in the group this was built from.
    label: str = "L/K"

    def degree(self) -> int:
        return self.p**self.n

    def isWild(self, i: int) -> bool:
        return i in self.wild

    def nonWild(self) -> List[int]:
        return [i for i in range(len(self.group)) if i not in self.wild]

    def unitsOutside(self, subset: Sequence[int]) -> RationalFunction:
        """∏ u_σ over σ ∉ subset."""
        members = set(subset)
        result = RationalFunction.constant(1, self.p, "u")
        for i, u in enumerate(self.units):
            if i not in members:
                result = result * u
        return result

    def kernelPolynomial(self, kernel: Sequence[int]) -> ResiduePolynomial:
        """∏_{σ ∈ kernel} (T + u_σ)."""
        return ResiduePolynomial.productOfLinear([self.units[i] for i in kernel], self.p)

    def abar0Derivative(self) -> RationalFunction:
        """dā₀/dx."""
        return self.abar0.derivative()

    def elementLabel(self, i: int) -> str:
        e = self.group.elements[i]
        if e.label:
            return e.label
        if e.image is not None:
            return e.image.toString()
        return str(i)


def additivePolyOracle(points: Sequence[RationalFunction], p: int) -> ResiduePolynomial:
    """
    ∏_{j ∈ F_p^r} (T + Σ j_i x_i) by brute force, for points x_1, ..., x_r whose nontrivial F_p-combinations are all
    nonzero. Also checks that the result is additive with linear coefficient ∏ of the nonzero combinations.
    """
    r = len(points)
    zero = RationalFunction.constant(0, p, "u")
    combinations = []
    for coefficients in itertools.product(range(p), repeat=r):
        value = zero
        for j, x in zip(coefficients, points):
            if j:
                value = value + x*j
        if any(coefficients) and value.isZero():
            raise SpanConditionViolated(f"The combination {coefficients} of {list(points)} vanishes.")
        combinations.append(value)

    result = ResiduePolynomial.productOfLinear(combinations, p)
    if not result.isAdditive():
        raise AdditivityViolation(f"{result.toString()} is not additive.")
    expected = RationalFunction.constant(1, p, "u")
    for value in combinations:
        if not value.isZero():
            expected = expected * value
    if result.linearCoefficient() != expected:
        raise AdditivityViolation(f"Linear coefficient {result.linearCoefficient()} differs from {expected}.")
    return result


def fpBasis(D: RamificationData, subgroup: Sequence[int]) -> List[int]:
    """Greedy F_p-basis of an elementary abelian subgroup."""
    basis = []
    span = {0}
    for i in subgroup:
        if i in span:
            continue
        basis.append(i)
        span = set(D.group.generatedSubgroup(basis))
    return basis


def buildRamificationData(group: GaloisGroup, jumps: Sequence[Optional[int]], units: Sequence[RationalFunction],
                          p: int, n: int, abar0: RationalFunction, hbar: RationalFunction,
                          spec: Optional[ExtensionSpec]=None, label: str="L/K") -> RamificationData:
    """
    Orders the elements by (jump, u-value), computes the invariants and runs every consistency check that the data
    allow.
    """
    if len(group) <= 1:
        raise InvalidExtension("The trivial group carries no ramification data.")
    if len(group) != p**n:
        raise InvalidExtension(f"Group of order {len(group)} for an extension of degree {p**n}.")

    others = sorted(range(1, len(group)), key=lambda i: (jumps[i], units[i].sortKey(), i))
    order = [0] + others
    group = group.reordered(order)
    jumps = tuple(jumps[i] for i in order)
    units = tuple(units[i] for i in order)
    for i, element in enumerate(group.elements):
        element.jump = jumps[i]

    rho = max(j for j in jumps if j is not None)
    conductor = rho + sum(j for j in jumps if j is not None)
    wild = tuple(i for i, j in enumerate(jumps) if j is None or j >= rho)
    s = 0
    while p**s < len(wild):
        s += 1
    if p**s != len(wild):
        raise InconsistentExtension(f"G^c has order {len(wild)}, which is not a power of {p}.")
    if conductor < p**n:
        raise InconsistentExtension(f"Conductor {conductor} is below the degree {p**n}.")

    # u is an injective homomorphism on G^c.
    for a in wild:
        if a != 0 and units[a].isZero():
            raise AdditivityViolation(f"u vanishes on the non-identity element {a} of G^c.")
        for b in wild:
            if units[group.multiply(a, b)] != units[a] + units[b]:
                raise AdditivityViolation(f"u(στ) ≠ u(σ) + u(τ) for σ = {a}, τ = {b}.")

    wild_polynomial = ResiduePolynomial.productOfLinear([units[i] for i in wild], p)
    if not wild_polynomial.isAdditive() or wild_polynomial.linearCoefficient().isZero():
        raise AdditivityViolation(f"∏(T + u_σ) over G^c is {wild_polynomial.toString()}, not a separable additive polynomial.")

    outside = RationalFunction.constant(1, p, "u")
    for i, u in enumerate(units):
        if i not in wild:
            outside = outside * u
    fbar = wild_polynomial * outside

    data = RamificationData(p=p, n=n, group=group, jumps=jumps, units=units, rho=rho, conductor=conductor, wild=wild,
                            s=s, fbar=fbar, abar0=abar0, hbar=hbar, spec=spec, origin=tuple(order), label=label)

    oracle = additivePolyOracle([units[i] for i in fpBasis(data, wild)], p) * outside
    if oracle != fbar:
        raise IdentityViolated("f̄_c = (∏ u_σ outside G^c)·(additive polynomial of a basis of G^c)", (oracle.toString(), fbar.toString()))

    if spec is not None and conductor > 2:
        for i in range(1, spec.degree):
            v = spec.coefficientValuation(i)
            if v is not None and v < 2:
                raise InconsistentExtension(f"c = {conductor} > 2 but v(a_{i}) = {v} < 2.")
    return data


def ramificationData(group: GaloisGroup) -> RamificationData:
    if len(group) <= 1:
        raise InvalidExtension("The trivial group carries no ramification data.")
    spec = group.elements[0].image.spec
    h = group.elements[0].image

    jumps: List[Optional[int]] = [None]
    units: List[RationalFunction] = [RationalFunction.constant(0, spec.p, "u")]
    for element in group.elements[1:]:
        difference = h - element.image
        v, unit = difference.unitPart()
        jumps.append(v)
        units.append(unit)
    return buildRamificationData(group, jumps, units, spec.p, spec.n, spec.abar0, spec.hbar, spec=spec)


########################################################################################################################


@dataclass
class AbstractExtensionData:
    """
    Ramification data given by hand: the group ∏ Z/p^{k_i}, a jump and a unit per non-identity element (keyed by its
    coordinate tuple), and the residue ā₀.
    """
    p: int
    n: int
    invariants: Tuple[int, ...]
    elements: Dict[Tuple[int, ...], Tuple[int, RationalFunction]]
    abar0: RationalFunction
    hbar: Optional[RationalFunction] = None
    abar0_derivative: Optional[RationalFunction] = None
    declared_conductor: Optional[int] = None


def _abstractGroup(p: int, invariants: Sequence[int]) -> Tuple[GaloisGroup, List[Tuple[int, ...]]]:
    moduli = [p**k for k in invariants]
    tuples = list(itertools.product(*[range(m) for m in moduli]))  # (0, ..., 0) comes first.
    position = {t: i for i, t in enumerate(tuples)}
    table = [[position[tuple((a+b) % m for a, b, m in zip(s, t, moduli))] for t in tuples] for s in tuples]
    elements = [GaloisElement(i, None, None, "(" + ",".join(map(str, t)) + ")") for i, t in enumerate(tuples)]
    return GaloisGroup(elements, table), tuples


def abstractRamificationData(A: AbstractExtensionData) -> RamificationData:
    if sum(A.invariants) != A.n:
        raise InvalidExtension(f"Group invariants {A.invariants} do not multiply to p^{A.n}.")
    if A.abar0.derivative().isZero():
        raise InvalidExtension(f"ā₀ = {A.abar0} is a p-th power.")
    if A.abar0_derivative is not None and A.abar0_derivative != A.abar0.derivative():
        raise InconsistentExtension(f"Declared dā₀/dx = {A.abar0_derivative} but ā₀ = {A.abar0} has derivative {A.abar0.derivative()}.")

    hbar = pnThRoot(-A.abar0, A.n)
    if A.hbar is not None:
        if A.hbar ** (A.p**A.n) != embedInResidueField(-A.abar0, A.n):
            raise InconsistentExtension(f"h̄ = {A.hbar} does not satisfy h̄^{A.p**A.n} = -ā₀.")
        hbar = A.hbar

    group, tuples = _abstractGroup(A.p, A.invariants)
    jumps: List[Optional[int]] = [None]
    units = [RationalFunction.constant(0, A.p, "u")]
    for t in tuples[1:]:
        if t not in A.elements:
            raise InvalidExtension(f"No jump and unit given for the element {t}.")
        jump, unit = A.elements[t]
        if jump < 1:
            raise InvalidExtension(f"Jump of {t} must be positive.")
        jumps.append(jump)
        units.append(unit)

    data = buildRamificationData(group, jumps, units, A.p, A.n, A.abar0, hbar, label="abstract")
    if A.declared_conductor is not None and A.declared_conductor != data.conductor:
        raise InconsistentExtension(f"Declared conductor {A.declared_conductor}, computed {data.conductor}.")
    return data
