from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal

from src.models.base_model import BaseModel

Decision = Literal["PASS", "FAIL"]

# Witness lists are capped so a broken run cannot eat memory
MAX_WITNESSES = 50


@dataclass
class CheckReport(BaseModel):
    """Outcome of one property suite.

    ``violations`` holds counterexamples, ``equality_witnesses`` the cases
    where a claimed equality was confirmed, ``vacuous`` the cases where an
    existential hypothesis could not be met. Each list keeps its first
    MAX_WITNESSES entries; the counters keep the totals.
    """
    name: str
    domain: Dict[str, Any]
    violations: List[Any] = field(default_factory=list)
    equality_witnesses: List[Any] = field(default_factory=list)
    vacuous: List[Any] = field(default_factory=list)
    violation_count: int = 0
    equality_count: int = 0
    vacuous_count: int = 0
    checked: int = 0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def decision(self) -> Decision:
        return "PASS" if self.violation_count == 0 else "FAIL"

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def violate(self, witness: Any) -> None:
        self.violation_count += 1
        if len(self.violations) < MAX_WITNESSES:
            self.violations.append(witness)

    def confirm(self, witness: Any) -> None:
        self.equality_count += 1
        if len(self.equality_witnesses) < MAX_WITNESSES:
            self.equality_witnesses.append(witness)

    def skip(self, witness: Any) -> None:
        self.vacuous_count += 1
        if len(self.vacuous) < MAX_WITNESSES:
            self.vacuous.append(witness)

    def record(self) -> Dict[str, Any]:
        """One machine-readable line per check."""
        return {
            "name": self.name,
            "domain": self.domain,
            "decision": self.decision,
            "checked": self.checked,
            "violations": self.violation_count,
            "equality_witnesses": self.equality_count,
            "vacuous": self.vacuous_count,
        }

    def render(self) -> str:
        domain = ", ".join(f"{k}={v}" for k, v in self.domain.items())
        lines = [
            f"[{self.decision}] {self.name} ({domain}): {self.checked} cases, "
            f"{self.violation_count} violations, {self.equality_count} equality witnesses"
        ]
        if self.vacuous_count:
            lines.append(f"    hypothesis not met in {self.vacuous_count} cases")
        for key, value in self.details.items():
            lines.append(f"    {key}: {value}")
        for witness in self.violations[:10]:
            lines.append(f"    violation: {witness}")
        return "\n".join(lines)
