import pytest

from ramcc.paths import PathManagement
from ramcc.formats.document import readDocument, parseDocument
from ramcc.formats.instances import buildInstance, presetRepresentations
from ramcc.datasets.corpus import ArtinSchreierFamily, ArtinSchreierConstant, TwoJumpFamily
from ramcc.ramification.characters import enumerateCharacters, VirtualRep
from ramcc.ramification.towers import Tower
from ramcc.kato.symbols import CanonicalSymbolForm
from ramcc.algebra.ratfun import RationalFunction
from ramcc.kato.swan import katoDifferent, differentCheck, swanDiffval, xiShiftCheck, swanRank1Closed, rank1Check, \
    inductionCheck, integralityCheck, kcc, quotientCheck, towerLawCheck, descentInvariance
from ramcc.errors import CharacterNotWild


def instanceOf(name: str):
    return buildInstance(readDocument(PathManagement.corpusDocument(name)))


def artinSchreier(p: int, constant: ArtinSchreierConstant):
    return buildInstance(parseDocument(ArtinSchreierFamily(p).document(constant)))


@pytest.mark.parametrize("name", ["anchor-p2", "anchor-p3", "anchor-p3-abstract", "two-jump-p2-regular"])
def test_different(name):
    D = instanceOf(name).data
    check = differentCheck(D)
    assert check.passed, check.toJson()
    assert not katoDifferent(D).isZero()


def test_trivial_character_has_no_swan_conductor():
    D = instanceOf("anchor-p3").data
    trivial = enumerateCharacters(D.group)[0]
    assert swanDiffval(VirtualRep.fromCharacter(trivial), D).isZero()


@pytest.mark.parametrize("p", ArtinSchreierFamily.PRIMES)
@pytest.mark.parametrize("constant", list(ArtinSchreierConstant))
def test_rank_one_closed_form(p, constant):
    D = artinSchreier(p, constant).data
    for chi in enumerateCharacters(D.group)[1:]:
        check = rank1Check(chi, D)
        assert check.passed, check.toJson()
        assert integralityCheck(swanDiffval(VirtualRep.fromCharacter(chi), D)).passed


def test_closed_form_needs_a_wild_character():
    D = instanceOf("two-jump-p2-regular").data
    tame = [chi for chi in enumerateCharacters(D.group) if not chi.isTrivial() and chi.isTrivialOn(D.wild)]
    assert tame
    with pytest.raises(CharacterNotWild):
        swanRank1Closed(tame[0], D)


@pytest.mark.parametrize("r", [2, 4])
def test_changing_the_additive_character(r):
    D = artinSchreier(5, ArtinSchreierConstant.X).data
    for chi in enumerateCharacters(D.group):
        check = xiShiftCheck(VirtualRep.fromCharacter(chi), D, r)
        assert check.passed, check.toJson()


def test_induction_formula():
    D = instanceOf("two-jump-p2-regular").data
    for _, rep in presetRepresentations("induced", D):
        theta = rep.terms[0].character
        check = inductionCheck(theta, D)
        assert check.passed, check.toJson()

    regular = presetRepresentations("regular", D)[0][1]
    assert inductionCheck(regular.terms[0].character, D).passed


def test_kcc_of_the_anchors():
    D = instanceOf("anchor-p2").data
    (_, rep), = presetRepresentations("wild", D)
    assert kcc(rep, D).toString() == "dx"

    D = instanceOf("anchor-p3").data
    forms = {kcc(rep, D).toString() for _, rep in presetRepresentations("faithful", D)}
    assert forms == {"dx", "-dx"}


def test_kcc_routes_agree():
    D = instanceOf("two-jump-p2-regular").data
    for _, rep in presetRepresentations("induced", D) + presetRepresentations("regular", D):
        assert kcc(rep, D, route="definition") == kcc(rep, D, route="induction")
    with pytest.raises(ValueError):
        kcc(rep, D, route="shortcut")


def test_kcc_power_is_the_defect():
    D = instanceOf("anchor-p3").data
    (_, regular), = presetRepresentations("regular", D)
    assert kcc(regular, D).power == 2


@pytest.mark.parametrize("p, precision", [(2, None), (3, 60)])
def test_tower_law_and_quotients(p, precision):
    D = buildInstance(parseDocument(TwoJumpFamily(p).document()), precision=precision).data
    tower = Tower()
    check = towerLawCheck(D, D.wild, tower)
    assert check.passed, check.toJson()
    for report in quotientCheck(D, tower.quotient(D, D.wild)):
        assert report.passed, report.toJson()

    abstract = Tower(prefer_abstract=True)
    assert towerLawCheck(D, D.wild, abstract).details["construction"] == "abstract"


def test_descent_along_constant_shifts():
    p = 3
    u = RationalFunction.generator(p, "u")
    assert descentInvariance(CanonicalSymbolForm.fromUnit(2, p, 1, 3), 1)
    assert not descentInvariance(CanonicalSymbolForm.fromUnit(u, p, 1, 3), 1)
    assert descentInvariance(CanonicalSymbolForm.fromUnit(u, p, 1, 3), 0)
    # u(u + 1)(u + 2) is permuted into itself.
    assert descentInvariance(CanonicalSymbolForm.fromUnit(u**3 - u, p, 1, 3), 1)
    assert descentInvariance(CanonicalSymbolForm.fromUnit(u**3 - u, p, 1, 3, coefficient=2), 2)
