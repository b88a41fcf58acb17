import pytest

from ramcc.paths import PathManagement
from ramcc.formats.document import readDocument, parseDocument
from ramcc.formats.instances import buildInstance, presetRepresentations
from ramcc.datasets.corpus import ArtinSchreierFamily, ArtinSchreierConstant, TwoJumpFamily
from ramcc.ramification.characters import enumerateCharacters, VirtualRep
from ramcc.ramification.towers import Tower, restrictedData, restrictCharacter
from ramcc.abbessaito.slopes import decompose, slopeOfCharacter
from ramcc.abbessaito.comparison import cc, compareCcKcc, ccInductionCheck, psiIndependenceCheck, hasseArfCheck
from ramcc.errors import CharacterNotWild


def instanceOf(name: str):
    return buildInstance(readDocument(PathManagement.corpusDocument(name)))


@pytest.mark.parametrize("p", ArtinSchreierFamily.PRIMES)
@pytest.mark.parametrize("constant", list(ArtinSchreierConstant))
def test_artin_schreier_family(p, constant):
    instance = buildInstance(parseDocument(ArtinSchreierFamily(p, preset="regular").document(constant)))
    D = instance.data
    for _, rep in presetRepresentations("wild", D) + presetRepresentations("regular", D):
        report = compareCcKcc(rep, D, instance.tower, raise_on_mismatch=False)
        assert report.equal, report.toJson()
        assert report.hasse_arf


@pytest.mark.parametrize("p, precision", [(2, None), (3, 60)])
def test_two_jump_family(p, precision):
    instance = buildInstance(parseDocument(TwoJumpFamily(p).document()), precision=precision)
    D = instance.data
    for preset in ["wild", "induced", "regular"]:
        for label, rep in presetRepresentations(preset, D):
            report = compareCcKcc(rep, D, instance.tower, raise_on_mismatch=False)
            assert report.equal, (label, report.toJson())
            if rep.isGenuine():
                assert report.hasse_arf, (label, report.toJson())


def test_anchor_values():
    instance = instanceOf("anchor-p2")
    (_, rep), = presetRepresentations("wild", instance.data)
    assert cc(rep, instance.data, instance.tower).descended(1).toString() == "dx"

    instance = instanceOf("anchor-p3")
    forms = {compareCcKcc(rep, instance.data, instance.tower).cc.toString() for _, rep in presetRepresentations("faithful", instance.data)}
    assert forms == {"dx", "-dx"}


def test_slope_decomposition_of_the_regular_representation():
    instance = instanceOf("two-jump-p2-regular")
    D = instance.data
    (_, regular), = presetRepresentations("regular", D)
    decomposition = decompose(regular, D, instance.tower)
    assert decomposition.slope0 == 1
    assert decomposition.slopes() == [4, 6]
    assert (decomposition.dimensionAt(4), decomposition.dimensionAt(6)) == (1, 2)
    assert decomposition.isGenuine()

    for chi in enumerateCharacters(D.group):
        expected = 0 if chi.isTrivial() else (4 if chi.isTrivialOn(D.wild) else 6)
        assert slopeOfCharacter(chi, D, instance.tower) == expected


def test_hasse_arf_for_the_regular_representation():
    instance = instanceOf("two-jump-p2-regular")
    (_, regular), = presetRepresentations("regular", instance.data)
    assert hasseArfCheck(cc(regular, instance.data, instance.tower), instance.data.n)


@pytest.mark.parametrize("name", ["two-jump-p2-regular", "two-jump-p3"])
def test_cc_of_induced_representations(name):
    instance = instanceOf(name)
    D = instance.data
    for _, rep in presetRepresentations("induced", D):
        check = ccInductionCheck(rep.terms[0].character, D, instance.tower)
        assert check.passed, check.toJson()

    trivial = enumerateCharacters(D.group, subgroup=D.wild)[0]
    with pytest.raises(CharacterNotWild):
        ccInductionCheck(trivial, D, instance.tower)


def test_cc_over_the_wild_subextension():
    instance = instanceOf("two-jump-p2-regular")
    D = instance.data
    (_, induced), = presetRepresentations("induced", D)
    theta = induced.terms[0].character
    DH = restrictedData(D, theta.subgroup)
    # L/L^H is Artin-Schreier with u_τ = 1 and dā₀' = dx_H, so cc_H(θ) = dx_H.
    ccH = cc(VirtualRep.fromCharacter(restrictCharacter(theta, DH)), DH, instance.tower)
    assert ccH.power == 1
    assert ccH.coefficient.isOne()
    assert ccInductionCheck(theta, D, instance.tower).passed


@pytest.mark.parametrize("p", [3, 5])
def test_order_does_not_depend_on_the_additive_character(p):
    instance = buildInstance(parseDocument(ArtinSchreierFamily(p).document(ArtinSchreierConstant.MOBIUS)))
    for _, rep in presetRepresentations("wild", instance.data):
        check = psiIndependenceCheck(rep, instance.data, instance.tower)
        assert check.passed, check.toJson()


def test_abstract_and_constructed_quotients_give_the_same_cc():
    instance = instanceOf("two-jump-p2-regular")
    D = instance.data
    (_, regular), = presetRepresentations("regular", D)
    assert cc(regular, D, Tower()) == cc(regular, D, Tower(prefer_abstract=True))
