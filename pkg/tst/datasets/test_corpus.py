import pytest

from ramcc.paths import PathManagement
from ramcc.datasets.corpus import ArtinSchreierFamily, ArtinSchreierConstant, TwoJumpFamily, BundledCorpus, \
    familyPaths, sweep


@pytest.fixture
def home(tmp_path, monkeypatch):
    monkeypatch.setattr("ramcc.paths.PATH_HOME", tmp_path)
    return tmp_path


def test_generated_families(home):
    family = ArtinSchreierFamily(3)
    card = family.card()
    assert (card.name, card.prime, card.size) == ("artin-schreier", 3, len(ArtinSchreierConstant))
    assert len(list((home / "artin-schreier-p3").glob("*.ramcc"))) == 3
    assert all(document.p == 3 and document.extension is not None for document in family.generate())

    assert TwoJumpFamily(2).card().size == 1
    assert len(familyPaths()) == len(ArtinSchreierConstant)*len(ArtinSchreierFamily.PRIMES) + len(TwoJumpFamily.PRIMES)


def test_rewriting_is_idempotent(home):
    folder = ArtinSchreierFamily(5)._get()
    before = {path.name: path.read_text(encoding="utf-8") for path in folder.glob("*.ramcc")}
    assert ArtinSchreierFamily(5)._get() == folder
    assert {path.name: path.read_text(encoding="utf-8") for path in folder.glob("*.ramcc")} == before


def test_bundled_and_rerouted(home):
    assert BundledCorpus().card().size == len(PathManagement.corpusDocuments())

    folder = TwoJumpFamily(3)._get()
    rerouted = BundledCorpus().rerouted(folder)
    assert rerouted.card().size == 1
    assert next(rerouted.generate()).p == 3


def test_sweep(home):
    reports = sweep("validate", families=[ArtinSchreierFamily(2)])
    assert [report.source for report in reports] == sorted(f"as-p2-{c.slug()}.ramcc" for c in ArtinSchreierConstant)
    assert all(report.exit_code == 0 for report in reports), [report.toJson() for report in reports]
