"""Oracle report records and the enumeration guard."""

from dataclasses import dataclass, field
from typing import Any

from src.errors import GroupTooLarge
from src.group import ENUMERATION_LIMIT, GroupParams


@dataclass
class OracleReport:
    """Result of one check; ``counterexample`` is set only when it failed."""

    name: str
    cases: int = 0
    failures: int = 0
    anomalies: int = 0
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        parts = [f"{status} {self.name}", f"cases={self.cases}", f"failures={self.failures}"]
        if self.anomalies:
            parts.append(f"anomalies={self.anomalies}")
        if self.counterexample:
            parts.append(
                "counterexample=(" + ", ".join(f"{k}={v}" for k, v in self.counterexample.items()) + ")"
            )
        return " ".join(parts)


def require_enumerable(params: GroupParams) -> None:
    """Raises GroupTooLarge when q is above the enumeration guard."""
    if params.q > ENUMERATION_LIMIT:
        raise GroupTooLarge(
            f"q has {params.q.bit_length()} bits; exhaustive checks need q <= 2^20"
        )
