"""
Reports are compared with the golden files on the keys the golden files mention, so that adding a field to a report
does not invalidate them.
"""
from typing import Any
from pathlib import Path
import difflib
import json

import pytest

from ramcc.paths import PathManagement
from ramcc.formats.document import readDocument
from ramcc.cli import run


def _project(expected: Any, actual: Any) -> Any:
    """The part of `actual` that has the shape of `expected`."""
    if isinstance(expected, dict) and isinstance(actual, dict):
        return {key: _project(value, actual[key]) if key in actual else "<missing>" for key, value in expected.items()}
    if isinstance(expected, list) and isinstance(actual, list) and len(expected) == len(actual):
        return [_project(e, a) for e, a in zip(expected, actual)]
    return actual


def _diff(label: str, expected: Any, actual: Any) -> str:
    diff = difflib.unified_diff(
        json.dumps(expected, indent=2, ensure_ascii=False, sort_keys=True).splitlines(),
        json.dumps(actual, indent=2, ensure_ascii=False, sort_keys=True).splitlines(),
        fromfile=f"expected:{label}", tofile=f"actual:{label}", lineterm=""
    )
    lines = list(diff)
    if len(lines) > 40:
        lines = lines[:40] + ["... (diff truncated)"]
    return "\n".join(lines)


def _goldens():
    return sorted(PathManagement.goldenFolder().glob("*.json"))


@pytest.mark.parametrize("golden", _goldens(), ids=lambda path: path.stem)
def test_golden(golden: Path):
    document_name, command = golden.stem.rsplit(".", 1)
    with open(golden, "r", encoding="utf-8") as handle:
        expected = json.load(handle)

    report = run(readDocument(PathManagement.corpusDocument(document_name)), command)
    actual = _project(expected, report.toJson())
    assert actual == expected, "\n" + _diff(golden.stem, expected, actual)
    assert report.exit_code == 0
