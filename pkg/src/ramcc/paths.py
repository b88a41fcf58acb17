from pathlib import Path
from typing import List

import os

PATH_PACKAGE = Path(__file__).resolve().parent
PATH_DATA    = PATH_PACKAGE.parent.parent / "data"
PATH_HOME    = Path(os.environ.get("RAMCC_HOME", Path.home() / ".cache" / "ramcc"))


class PathManagement:

    @staticmethod
    def corpusFolder() -> Path:
        return PathManagement._extendData(["corpus"])

    @staticmethod
    def corpusDocuments() -> List[Path]:
        return sorted(PathManagement.corpusFolder().glob("*.ramcc"))

    @staticmethod
    def corpusDocument(name: str) -> Path:
        path = PathManagement.corpusFolder() / (name if name.endswith(".ramcc") else name + ".ramcc")
        if not path.exists():
            raise ValueError(f"No corpus document called {name} in {PathManagement.corpusFolder().as_posix()}")
        return path

    @staticmethod
    def goldenFolder() -> Path:
        return PathManagement._extendData(["golden"])

    @staticmethod
    def familyCache(family_name: str) -> Path:
        """Where the documents of a generated corpus family are written."""
        if not family_name:
            raise ValueError("A corpus family must have a non-empty name!")
        return PathManagement._extendHome([family_name])

    @staticmethod
    def _extendData(parts: List[str]) -> Path:
        folder = PATH_DATA
        for part in parts:
            folder /= part
        return folder

    @staticmethod
    def _extendHome(parts: List[str]) -> Path:
        folder = PATH_HOME
        for part in parts:
            folder /= part
        folder.mkdir(parents=True, exist_ok=True)
        return folder
