from typing import Iterable, Iterator, TypeVar, Generic, Tuple
from typing_extensions import Self
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path

from ..paths import PathManagement


@dataclass
class CorpusCard:
    name: str
    prime: int
    size: int


M = TypeVar("M")
class CorpusFamily(ABC, Generic[M]):
    """
    The responsibilities of this class's descendants are
        1. Knowing where the documents of the family come from (bundled files, or text the family writes itself);
        2. Reading those documents and turning them into the objects the caller wants.

    Like for any generic base, communicate the type of the generated objects in the inheritance,
    e.g. `class ArtinSchreierFamily(CorpusFamily[InputDocument]): ...`.
    """

    def __init__(self, name: str, p: int):
        self._name = name
        self._p = p

        self._rerouted: Path = None

    @abstractmethod
    def _get(self) -> Path:
        """
        Make sure the family's documents exist locally, and return the folder they are in.
        """
        pass

    @abstractmethod
    def _generate(self, folder: Path, **kwargs) -> Iterator[M]:
        """
        Read the documents in the given folder and generate objects.
        """
        pass

    def _getCachePath(self) -> Path:
        return PathManagement.familyCache(f"{self._name}-p{self._p}")

    def _writeAll(self, documents: Iterable[Tuple[str, str]]) -> Path:
        """Write (filename, text) pairs into the cache unless they are already there."""
        folder = self._getCachePath()
        for filename, text in documents:
            path = folder / filename
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                path.write_text(text, encoding="utf-8")
        return folder

    def generate(self, **kwargs) -> Iterator[M]:
        yield from self._generate(self._get() if not self._rerouted else self._rerouted, **kwargs)

    def card(self) -> CorpusCard:
        return CorpusCard(name=self._name, prime=self._p, size=sum(1 for _ in self.generate()))

    def rerouted(self, folder: Path) -> Self:
        """
        Read the documents from another folder, bypassing ._get(). Returns itself so you can call it on the same line
        as the constructor.
        """
        self._rerouted = folder
        return self
