import pytest

from ramcc.paths import PathManagement
from ramcc.formats.document import readDocument
from ramcc.formats.instances import buildInstance, presetRepresentations
from ramcc.ramification.characters import enumerateCharacters, liftModularCharacter, VirtualRep
from ramcc.ramification.towers import Tower, restrictedData, abstractQuotient
from ramcc.errors import InvalidExtension


def dataOf(name: str):
    return buildInstance(readDocument(PathManagement.corpusDocument(name))).data


def test_characters_of_a_cyclic_group():
    D = dataOf("anchor-p3")
    characters = enumerateCharacters(D.group)
    assert len(characters) == 3
    assert characters[0].isTrivial()
    assert all(chi.order == 3 for chi in characters)
    assert sorted(chi.exponents for chi in characters[1:]) == [(0, 1, 2), (0, 2, 1)]


def test_characters_of_a_subgroup():
    D = dataOf("two-jump-p2-regular")
    assert len(enumerateCharacters(D.group)) == 4
    on_wild = enumerateCharacters(D.group, subgroup=D.wild)
    assert len(on_wild) == 2
    assert on_wild[1].index() == 2


def test_regular_representation():
    D = dataOf("two-jump-p2-regular")
    trivial_on_identity = enumerateCharacters(D.group, subgroup=[0])[0]
    regular = VirtualRep.induced(trivial_on_identity)
    assert regular.dimension() == 4
    assert regular.innerWithTrivial().rationalValue() == 1
    assert regular.trace(0).rationalValue() == 4
    assert all(regular.trace(g).isZero() for g in range(1, 4))


def test_virtual_sums():
    D = dataOf("anchor-p3")
    trivial, chi, chi_bar = enumerateCharacters(D.group)
    rep = VirtualRep.fromCharacter(chi) + VirtualRep.fromCharacter(chi_bar) + VirtualRep.fromCharacter(trivial, -1)
    assert rep.dimension() == 1
    assert not rep.isGenuine()
    assert rep.innerWithTrivial().rationalValue() == -1


def test_presets():
    D = dataOf("anchor-p3")
    assert len(presetRepresentations("wild", D)) == 2
    assert len(presetRepresentations("faithful", D)) == 2
    assert [rep.dimension() for _, rep in presetRepresentations("regular", D)] == [3]

    D = dataOf("two-jump-p2-regular")
    assert len(presetRepresentations("wild", D)) == 2
    assert len(presetRepresentations("faithful", D)) == 0
    assert all(rep.dimension() == 2 for _, rep in presetRepresentations("induced", D))


def test_quotient_routes_agree():
    D = dataOf("two-jump-p2-regular")
    constructed = Tower().quotient(D, D.wild)
    abstract = abstractQuotient(D, D.wild)
    assert abstract.construction == "abstract"
    assert abstract.data.jumps == (None, 2)
    assert constructed.data.conductor == abstract.data.conductor == 4

    restricted = restrictedData(D, D.wild)
    assert restricted.degree() == 2
    assert restricted.jumps == (None, 2)
    assert set(restricted.origin) == set(D.wild)


def test_lifting_modular_characters():
    D = dataOf("anchor-p3")
    # 2 has order 3 modulo 7.
    lifted = liftModularCharacter(D.group, range(3), [1, 2, 4], ell=7, root=2)
    assert lifted.exponents == (0, 1, 2)
    assert lifted in enumerateCharacters(D.group)
    assert liftModularCharacter(D.group, range(3), [1, 4, 2], ell=7, root=2).exponents == (0, 2, 1)

    with pytest.raises(InvalidExtension):
        liftModularCharacter(D.group, range(3), [1, 1, 1], ell=5, root=2)
    with pytest.raises(InvalidExtension):
        liftModularCharacter(D.group, range(3), [1, 1, 1], ell=7, root=1)
    with pytest.raises(InvalidExtension):
        liftModularCharacter(D.group, range(3), [1, 3, 2], ell=7, root=2)
