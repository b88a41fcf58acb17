import pytest

from ramcc.paths import PathManagement
from ramcc.algebra.ratfun import RationalFunction, embedInResidueField
from ramcc.algebra.differentials import DifferentialForm
from ramcc.formats.document import readDocument
from ramcc.formats.instances import buildInstance, buildTriple
from ramcc.nearby.cycles import HorizontalPointData, VerticalPointData, TripleDescription, dimtotHorizontal, \
    dimtotVertical, ordOfTensor, eulerNearby
from ramcc.errors import NegativeDimension, ZeroTensor


def tripleOf(name: str, with_instance: bool=False) -> TripleDescription:
    document = readDocument(PathManagement.corpusDocument(name))
    return buildTriple(document, buildInstance(document) if with_instance else None)


def test_horizontal_total_dimension():
    assert dimtotHorizontal(HorizontalPointData(1, 0, 1)) == 1
    assert dimtotHorizontal(HorizontalPointData(2, 3, 1)) == 8
    with pytest.raises(ValueError):
        HorizontalPointData(0, 0, 1)


def test_order_of_tensors():
    p = 3
    x = RationalFunction.generator(p)
    assert ordOfTensor(DifferentialForm(RationalFunction.constant(-1, p))) == 0
    assert ordOfTensor(DifferentialForm(x**2, 2)) == 2
    assert ordOfTensor(DifferentialForm(x.inverse())) == -1
    assert ordOfTensor(DifferentialForm(embedInResidueField(x**2, 1), 2), level=1) == 2
    with pytest.raises(ZeroTensor):
        ordOfTensor(DifferentialForm(RationalFunction.constant(0, p)))


def test_vertical_total_dimension():
    p = 3
    x = RationalFunction.generator(p)
    assert dimtotVertical(VerticalPointData(cc=DifferentialForm(x.inverse()), tame_swan=0, tame_rank=1)) == 2
    assert dimtotVertical(VerticalPointData(deligne=4)) == 4
    with pytest.raises(ValueError):
        VerticalPointData()
    with pytest.raises(ValueError):
        VerticalPointData(cc=DifferentialForm(x), deligne=1)


def test_constant_sheaf():
    report = eulerNearby(tripleOf("constant-sheaf"))
    assert (report.phi_s, report.phi_eta, report.psi0, report.psi1) == (1, 0, 1, 0)


def test_punctured_disc():
    report = eulerNearby(tripleOf("punctured-disc"))
    assert (report.phi_s, report.phi_eta, report.psi1) == (1, 1, 0)
    assert eulerNearby(tripleOf("punctured-disc-deligne")) == report


def test_computed_vertical_points():
    triple = tripleOf("anchor-p3-nearby", with_instance=True)
    assert len(triple.vertical) == 2
    assert all(dimtotVertical(point) == 0 for point in triple.vertical)
    assert eulerNearby(triple).psi1 == 0


def test_genus_contributes_twice_the_rank():
    triple = TripleDescription(delta=2, rank=3, psi0=1, vertical=[VerticalPointData(deligne=1)])
    assert eulerNearby(triple).psi1 == 1 - 1 + 0 + 2*2*3


def test_negative_dimension():
    triple = TripleDescription(delta=0, rank=1, psi0=0, vertical=[VerticalPointData(deligne=5)])
    with pytest.raises(NegativeDimension):
        eulerNearby(triple)


def test_direct_sums_add():
    p = 3
    x = RationalFunction.generator(p)
    a = TripleDescription(1, 1, 2, [HorizontalPointData(1, 2, 1)],
                          [VerticalPointData(cc=DifferentialForm(x.inverse()), tame_swan=1, tame_rank=0)])
    b = TripleDescription(1, 2, 0, [HorizontalPointData(1, 0, 2)],
                          [VerticalPointData(deligne=3)])
    total = eulerNearby(TripleDescription.directSum(a, b))
    left, right = eulerNearby(a), eulerNearby(b)
    assert total.phi_s == left.phi_s + right.phi_s
    assert total.phi_eta == left.phi_eta + right.phi_eta
    assert total.psi1 == left.psi1 + right.psi1


def test_ranks_of_vertical_points_are_checked(monkeypatch):
    warnings = []
    monkeypatch.setattr("ramcc.nearby.cycles.warn", lambda message: warnings.append(message))
    x = RationalFunction.generator(3)

    consistent = VerticalPointData(cc=DifferentialForm(x.inverse()), tame_swan=0, tame_rank=1)
    assert consistent.rank() == 2
    assert VerticalPointData(deligne=2).rank() is None
    TripleDescription(0, 2, 0, vertical=[consistent, VerticalPointData(deligne=2)]).checkRanks()
    assert warnings == []

    TripleDescription(0, 1, 0, vertical=[consistent]).checkRanks()
    assert len(warnings) == 1 and "Vertical point 0" in warnings[0]

    eulerNearby(tripleOf("anchor-p3-nearby", with_instance=True))
    eulerNearby(tripleOf("punctured-disc"))
    assert len(warnings) == 1
