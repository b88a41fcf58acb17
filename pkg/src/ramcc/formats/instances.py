"""
Turns a parsed document into the objects the computations run on: the extension, its ramification data, the
representations to evaluate and the nearby-cycles triple.
"""
from typing import List, Tuple, Optional
from dataclasses import dataclass

from ..config import Defaults
from ..fields.extension import ExtensionSpec
from ..ramification.galois import verifyConjugates
from ..ramification.conjugates import findConjugates
from ..ramification.data import RamificationData, ramificationData, abstractRamificationData
from ..ramification.characters import Character, VirtualRep, enumerateCharacters
from ..ramification.towers import Tower
from ..nearby.cycles import TripleDescription, HorizontalPointData, VerticalPointData
from ..abbessaito.comparison import cc
from ..algebra.differentials import DifferentialForm
from .document import InputDocument, RepresentationBlock
from ..errors import ParseError, InputError

LabelledRep = Tuple[str, VirtualRep]


@dataclass
class Instance:
    document: InputDocument
    data: RamificationData
    tower: Tower
    psi: int
    spec: Optional[ExtensionSpec] = None

    @property
    def name(self) -> str:
        return self.document.source or self.data.label


def buildSpec(document: InputDocument, precision: Optional[int]=None) -> ExtensionSpec:
    block = document.require("extension")
    return block.spec(document.p, Defaults.resolvePrecision(precision, document.precision))


def buildData(document: InputDocument, precision: Optional[int]=None, seed: int=0) -> Tuple[RamificationData, Optional[ExtensionSpec]]:
    """
    Ramification data of the document's extension: from O_L when an [extension] is given (explicit conjugates are
    verified, otherwise they are searched for), from the [abstract] block otherwise.
    """
    if document.extension is not None:
        spec = buildSpec(document, precision)
        if document.extension.conjugates:
            roots = document.extension.conjugateElements(spec)
        else:
            roots = findConjugates(spec, seed)
        group = verifyConjugates(roots[0].spec, roots)
        return ramificationData(group), roots[0].spec
    if document.abstract is not None:
        return abstractRamificationData(document.abstract.data(document.p)), None
    raise ParseError(1, 1, "an [extension] or [abstract] section")


def buildInstance(document: InputDocument, precision: Optional[int]=None, seed: int=0, psi: Optional[int]=None) -> Instance:
    psi = psi or Defaults.psiExponent()
    if psi % document.p == 0:
        raise InputError(f"ψ₀(1) = ζ_p^{psi} is trivial for p = {document.p}.")
    data, spec = buildData(document, precision, seed)
    if document.source:
        data.label = document.source
    return Instance(document, data, Tower(seed=seed), psi, spec)


########################################################################################################################


def _kernel(chi: Character) -> List[int]:
    return [g for g, e in zip(chi.subgroup, chi.exponents) if e == 0]


def presetRepresentations(preset: str, D: RamificationData) -> List[LabelledRep]:
    G = D.group
    if preset == "wild":
        return [(f"χ{chi.toString()}", VirtualRep.fromCharacter(chi))
                for chi in enumerateCharacters(G) if not chi.isTrivialOn(D.wild)]
    if preset == "faithful":
        return [(f"χ{chi.toString()}", VirtualRep.fromCharacter(chi))
                for chi in enumerateCharacters(G) if len(_kernel(chi)) == 1]
    if preset == "regular":
        trivial = Character(G, (G.identity(),), (0,), G.exponent())
        return [("regular", VirtualRep.induced(trivial))]
    if preset == "induced":
        reps = []
        for H in G.subgroupsContaining(D.wild):
            if len(H) * D.p != len(G):
                continue
            for theta in enumerateCharacters(G, H):
                if not theta.isTrivialOn(D.wild):
                    reps.append((f"ind({list(H)}; {theta.toString()})", VirtualRep.induced(theta)))
        return reps
    raise ParseError(1, 1, "a known preset", preset)


def _character(D: RamificationData, subgroup: Tuple[int, ...], exponents: Tuple[int, ...]) -> Character:
    G = D.group
    if any(g < 0 or g >= len(G) for g in subgroup) or not G.isSubgroup(subgroup):
        raise InputError(f"{list(subgroup)} is not a subgroup of G (elements 0 ... {len(G)-1}).")
    order = G.exponent()
    values = dict(zip(subgroup, (e % order for e in exponents)))
    subgroup = tuple(sorted(subgroup))
    wanted = tuple(values[g] for g in subgroup)
    for chi in enumerateCharacters(G, subgroup, order):
        if chi.exponents == wanted:
            return chi
    raise InputError(f"ζ_{order}-exponents {list(exponents)} on {list(subgroup)} do not define a character.")


def documentRepresentations(block: Optional[RepresentationBlock], D: RamificationData) -> List[LabelledRep]:
    """The preset's representations, then one virtual representation made of all explicit lines. Default: wild."""
    if block is None:
        return presetRepresentations("wild", D)
    reps = presetRepresentations(block.preset, D) if block.preset else []

    everything = tuple(range(len(D.group)))
    terms = [VirtualRep.fromCharacter(_character(D, everything, exponents), m) for m, exponents in block.characters]
    terms += [VirtualRep.induced(_character(D, subgroup, exponents), m) for m, subgroup, exponents in block.induced]
    if terms:
        combined = VirtualRep.sum(terms)
        reps.append((combined.toString(), combined))
    return reps


def instanceRepresentations(instance: Instance) -> List[LabelledRep]:
    return documentRepresentations(instance.document.representation, instance.data)


########################################################################################################################


def buildTriple(document: InputDocument, instance: Optional[Instance]=None) -> TripleDescription:
    """
    The nearby-cycles triple. `vertical = cc SW RANK` lines use the characteristic cycle of every representation
    of the document, so they need an extension.
    """
    block = document.require("triple")
    horizontal = [HorizontalPointData(*values) for values in block.horizontal]
    vertical = []
    for line in block.vertical:
        if line.kind == "deligne":
            vertical.append(VerticalPointData(deligne=line.values[0]))
        elif line.kind == "unramified":
            empty = DifferentialForm.scalar(1, document.p)
            vertical.append(VerticalPointData(cc=empty, tame_swan=line.values[0], tame_rank=line.values[1], label="unramified"))
        else:
            if instance is None:
                raise ParseError(1, 1, "an [extension] or [abstract] section for 'vertical = cc'")
            for label, rep in instanceRepresentations(instance):
                form = cc(rep, instance.data, instance.tower, instance.psi)
                vertical.append(VerticalPointData(cc=form, tame_swan=line.values[0], tame_rank=line.values[1],
                                                  level=instance.data.n, label=label))
    return TripleDescription(block.delta, block.rank, block.psi0, horizontal, vertical)
