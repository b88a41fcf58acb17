"""
What a command hands back, and the two ways of showing it: JSON for machines, aligned tables for people.
"""
from typing import Any, Dict, List, Optional, Iterator, Tuple
from dataclasses import dataclass, field

import json
from tktkt.util.printing import PrintTable

from .. import __version__
from ..errors import RamccError, ParseError
from ..interfaces.checks import CheckReport


@dataclass
class Report:
    command: str
    source: str
    seed: int
    psi: int
    results: Dict[str, Any] = field(default_factory=dict)
    diagnostics: List[Dict[str, Any]] = field(default_factory=list)
    error: Optional[Dict[str, Any]] = None
    exit_code: int = 0

    def addCheck(self, check: CheckReport):
        """Failed checks become diagnostics and turn the exit code into a mismatch."""
        if not check.passed:
            self.diagnostics.append(check.toJson())
            self.exit_code = max(self.exit_code, 1)

    def addChecks(self, checks: List[CheckReport]):
        for check in checks:
            self.addCheck(check)

    def fail(self, error: RamccError):
        self.error = {"type": type(error).__name__, "message": str(error)}
        if isinstance(error, ParseError):
            self.error.update({"line": error.line, "col": error.col, "expected": error.expected})
        self.exit_code = max(self.exit_code, error.exit_code)

    def toJson(self) -> Dict[str, Any]:
        result = {
            "command": self.command,
            "source": self.source,
            "version": __version__,
            "seed": self.seed,
            "psi": self.psi,
            "results": self.results,
            "diagnostics": self.diagnostics
        }
        if self.error is not None:
            result["error"] = self.error
        return result


def dumpJson(reports: List[Report]) -> str:
    payload = reports[0].toJson() if len(reports) == 1 else [r.toJson() for r in reports]
    return json.dumps(payload, indent=2, ensure_ascii=False)


########################################################################################################################


def _flatten(value: Any, path: str) -> Iterator[Tuple[str, str]]:
    if isinstance(value, dict):
        if set(value) == {"numerator", "denominator", "power"}:
            quotient = value["numerator"] if value["denominator"] == "1" else f"({value['numerator']})/({value['denominator']})"
            yield path, f"{quotient} (dx)^{value['power']}"
            return
        for key, sub in value.items():
            yield from _flatten(sub, f"{path}.{key}" if path else str(key))
    elif isinstance(value, list) and value and all(isinstance(v, (dict, list)) for v in value):
        for i, sub in enumerate(value):
            yield from _flatten(sub, f"{path}[{i}]")
    elif isinstance(value, list):
        yield path, ", ".join(map(str, value))
    else:
        yield path, str(value)


def printHuman(report: Report):
    table = PrintTable()
    table.print("document", report.source or "-")
    table.print("command", report.command)
    for key, value in _flatten(report.results, ""):
        table.print(key, value)
    for diagnostic in report.diagnostics:
        table.print("FAILED " + diagnostic.get("check", "check"), f"{diagnostic.get('left', '')} != {diagnostic.get('right', '')}")
    if report.error is not None:
        where = f" (line {report.error['line']}, column {report.error['col']})" if "line" in report.error else ""
        table.print("ERROR " + report.error["type"] + where, report.error["message"])
    print()
