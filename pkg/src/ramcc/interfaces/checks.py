from typing import Any, Dict, Optional
from dataclasses import dataclass, field

from ..errors import IdentityViolated, MathematicalMismatch


@dataclass
class CheckReport:
    """
    Outcome of one identity that two computations should satisfy. The two sides are kept as strings so that reports
    stay printable and serialisable whatever they compared.
    """
    name: str
    passed: bool
    left: str = ""
    right: str = ""
    details: Dict[str, Any] = field(default_factory=dict)

    def require(self, error: Optional[type]=None) -> "CheckReport":
        """Raise when the check failed. Returns itself so calls can be chained."""
        if not self.passed:
            if error is None or not issubclass(error, MathematicalMismatch):
                raise IdentityViolated(self.name, (self.left, self.right))
            raise error(f"{self.name}: {self.left} != {self.right}")
        return self

    def toJson(self) -> Dict[str, Any]:
        result = {"check": self.name, "passed": self.passed, "left": self.left, "right": self.right}
        if self.details:
            result["details"] = self.details
        return result


def compareValues(name: str, left: Any, right: Any, **details) -> CheckReport:
    return CheckReport(name, left == right, _show(left), _show(right), dict(details))


def _show(value: Any) -> str:
    return value.toString() if hasattr(value, "toString") else str(value)
