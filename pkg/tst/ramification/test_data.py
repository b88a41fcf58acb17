import pytest

from ramcc.paths import PathManagement
from ramcc.algebra.ratfun import RationalFunction
from ramcc.formats.document import readDocument, parseDocument
from ramcc.formats.instances import buildInstance
from ramcc.datasets.corpus import TwoJumpFamily
from ramcc.ramification.data import additivePolyOracle
from ramcc.errors import NotARoot, NotClosed, SpanConditionViolated, InconsistentExtension


def instanceOf(name: str, **kwargs):
    return buildInstance(readDocument(PathManagement.corpusDocument(name)), **kwargs)


ANCHOR_WITHOUT_CONJUGATES = "[field]\np = 3\nprecision = 40\n[extension]\nn = 1\na0 = -x\na1 = -t^2\n"


def test_anchor_p3():
    D = instanceOf("anchor-p3").data
    assert D.degree() == 3
    assert D.jumps == (None, 1, 1)
    assert (D.rho, D.conductor, D.s) == (1, 3, 1)
    assert D.wild == (0, 1, 2)
    assert [u.toString() for u in D.units[1:]] == ["1", "-1"]
    assert D.fbar.toString() == "T^3 - T"
    assert D.hbar == RationalFunction.generator(3, "u")
    D.group.checkAxioms()


def test_anchor_p2():
    D = instanceOf("anchor-p2").data
    assert D.degree() == 2
    assert (D.rho, D.conductor) == (1, 2)
    assert D.units[1].isOne()


def test_searched_conjugates_agree_with_given_ones():
    given = instanceOf("anchor-p3").data
    searched = buildInstance(parseDocument(ANCHOR_WITHOUT_CONJUGATES)).data
    assert searched.jumps == given.jumps
    assert searched.units == given.units
    assert searched.fbar == given.fbar


def test_abstract_data_agree_with_the_extension():
    concrete = instanceOf("anchor-p3").data
    abstract = instanceOf("anchor-p3-abstract").data
    assert abstract.spec is None
    assert (abstract.rho, abstract.conductor, abstract.jumps) == (concrete.rho, concrete.conductor, concrete.jumps)
    assert abstract.fbar == concrete.fbar
    assert abstract.units == concrete.units


def test_declared_conductor_is_checked():
    document = readDocument(PathManagement.corpusDocument("anchor-p3-abstract"))
    document.abstract.conductor = 4
    with pytest.raises(InconsistentExtension):
        buildInstance(document)


def test_two_jumps_p2():
    D = instanceOf("two-jump-p2-regular").data
    assert sorted(j for j in D.jumps if j is not None) == [1, 1, 2]
    assert (D.rho, D.conductor) == (2, 6)
    assert len(D.wild) == 2 and D.s == 1
    assert D.group.isAbelian() and D.group.exponent() == 2


def test_two_jumps_p3():
    D = buildInstance(parseDocument(TwoJumpFamily(3).document()), precision=60).data
    assert sorted(j for j in D.jumps if j is not None) == [1]*6 + [2]*2
    assert (D.rho, D.conductor) == (2, 12)
    assert len(D.wild) == 3


@pytest.mark.parametrize("conjugates, error", [
    ("h; h + t; h + t^2", NotARoot),
    ("h + t; h; h - t", NotARoot),
    ("h; h + t; h + t", NotClosed)
])
def test_bad_conjugates(conjugates, error):
    with pytest.raises(error):
        buildInstance(parseDocument(ANCHOR_WITHOUT_CONJUGATES + f"conjugates = {conjugates}\n"))


def test_additive_polynomial_oracle():
    p = 3
    u = RationalFunction.generator(p, "u")
    polynomial = additivePolyOracle([u], p)  # T(T + u)(T + 2u) = T^3 - u^2 T
    assert polynomial.isAdditive()
    assert polynomial.degree() == 3
    assert polynomial.linearCoefficient() == -(u**2)

    polynomial = additivePolyOracle([u, u**2], 2)
    assert polynomial.degree() == 4
    assert polynomial.linearCoefficient() == u * u**2 * (u + u**2)

    with pytest.raises(SpanConditionViolated):
        additivePolyOracle([u, u*2], p)
