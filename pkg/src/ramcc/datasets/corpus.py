"""
The extensions every identity is checked on:
    - Artin-Schreier extensions T^p - t^{p-1}T - a₀ for a few residues a₀;
    - degree-p² extensions P_D(T) - x, where P_D is the additive polynomial whose roots are D = F_p·t ⊕ F_p·t², so that
      G = D has the two jumps 1 and 2;
    - the hand-written documents bundled in data/corpus.
"""
from enum import Enum
from pathlib import Path
from typing import Iterator, List, Optional

from tktkt.util.timing import timeit

from ..interfaces.corpus import CorpusFamily
from ..formats.document import InputDocument, readDocument
from ..paths import PathManagement
from ..cli import runFiles


class ArtinSchreierConstant(Enum):
    X      = 1
    CUBIC  = 2
    MOBIUS = 3

    def toString(self) -> str:
        if self == ArtinSchreierConstant.X:
            return "-x"
        elif self == ArtinSchreierConstant.CUBIC:
            return "-x^3 - x"
        elif self == ArtinSchreierConstant.MOBIUS:
            return "-x/(x + 1)"
        else:
            raise ValueError("Enum value has no string representation:", self)

    def slug(self) -> str:
        return self.name.lower()


def _readFolder(folder: Path) -> Iterator[InputDocument]:
    for path in sorted(folder.glob("*.ramcc")):
        yield readDocument(path)


class ArtinSchreierFamily(CorpusFamily[InputDocument]):

    PRIMES = (2, 3, 5)

    def __init__(self, p: int, preset: str="wild"):
        super().__init__(name="artin-schreier", p=p)
        self._preset = preset

    def document(self, constant: ArtinSchreierConstant) -> str:
        p = self._p
        return f"# f = T^{p} - t^{p-1}*T + ({constant.toString()})\n" \
               f"[field]\np = {p}\n\n" \
               f"[extension]\nn = 1\na0 = {constant.toString()}\na1 = -t^{p-1}\n\n" \
               f"[representation]\npreset = {self._preset}\n"

    def _get(self) -> Path:
        return self._writeAll((f"as-p{self._p}-{constant.slug()}.ramcc", self.document(constant)) for constant in ArtinSchreierConstant)

    def _generate(self, folder: Path, **kwargs) -> Iterator[InputDocument]:
        yield from _readFolder(folder)


class TwoJumpFamily(CorpusFamily[InputDocument]):
    """
    P_D(X) = Q(X)^p - β^{p-1}·Q(X) with Q(X) = X^p - t^{p-1}X and β = Q(t²) = t^{2p} - t^{p+1}. In characteristic p this
    is X^{p²} - (t^{p(p-1)} + β^{p-1})X^p + β^{p-1}t^{p-1}X.
    """

    PRIMES = (2, 3)

    def __init__(self, p: int, preset: str="wild"):
        super().__init__(name="two-jump", p=p)
        self._preset = preset

    def document(self) -> str:
        p = self._p
        beta = f"(t^{2*p} - t^{p+1})"
        return f"# f = P_D(T) - x with D = F_{p}*t + F_{p}*t^2\n" \
               f"[field]\np = {p}\n\n" \
               f"[extension]\nn = 2\na0 = -x\n" \
               f"a1 = {beta}^{p-1}*t^{p-1}\n" \
               f"a{p} = -t^{p*(p-1)} - {beta}^{p-1}\n\n" \
               f"[representation]\npreset = {self._preset}\n"

    def _get(self) -> Path:
        return self._writeAll([(f"two-jump-p{self._p}.ramcc", self.document())])

    def _generate(self, folder: Path, **kwargs) -> Iterator[InputDocument]:
        yield from _readFolder(folder)


class BundledCorpus(CorpusFamily[InputDocument]):
    """The documents shipped in data/corpus, whatever their prime."""

    def __init__(self):
        super().__init__(name="bundled", p=0)

    def _get(self) -> Path:
        return PathManagement.corpusFolder()

    def _generate(self, folder: Path, **kwargs) -> Iterator[InputDocument]:
        yield from _readFolder(folder)


def allFamilies() -> List[CorpusFamily[InputDocument]]:
    return [ArtinSchreierFamily(p) for p in ArtinSchreierFamily.PRIMES] \
         + [TwoJumpFamily(p) for p in TwoJumpFamily.PRIMES]


def familyPaths(families: Optional[List[CorpusFamily[InputDocument]]]=None) -> List[Path]:
    """Paths of the generated documents, for the CLI."""
    paths = []
    for family in families if families is not None else allFamilies():
        paths.extend(sorted(family._get().glob("*.ramcc")))
    return paths


@timeit
def sweep(command: str="compare", families: Optional[List[CorpusFamily[InputDocument]]]=None, seed: int=0, jobs: int=1) -> list:
    """Run a command over every generated document, or those of the given families. Returns the reports."""
    return runFiles(familyPaths(families), command, seed=seed, jobs=jobs, progress=False)
