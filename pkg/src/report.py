"""Verification report containers and their JSON / console renderings."""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Optional

from exactalg import ProjPoint, format_rational
from vertexcore import Weights


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def tally(name: str, outcomes: Iterable[bool], unit: str = "samples") -> Check:
    """Fold per-sample outcomes into one check; notes the first failing index."""
    results = list(outcomes)
    passed = sum(results)
    detail = f"{passed}/{len(results)} {unit}"
    failing = next((i for i, ok in enumerate(results) if not ok), None)
    if failing is not None:
        detail += f", first failure at index {failing}"
    return Check(name, passed == len(results), detail)


def to_json_value(value: Any) -> Any:
    """Exact values as canonical strings; containers recursively."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Weights):
        return value.as_strings()
    if isinstance(value, ProjPoint):
        return str(value)
    if isinstance(value, dict):
        return {str(k): to_json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_value(v) for v in value]
    return str(value)


@dataclass
class VerificationReport:
    """Outcome of one CLI command.

    ``passed`` is the conjunction of the checks; a report carrying an
    ``error`` never passes.
    """
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    values: dict[str, Any] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    seed: Optional[int] = None
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.error is None and all(c.passed for c in self.checks)

    @property
    def failed_checks(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, checks: Iterable[Check]) -> None:
        self.checks.extend(checks)

    def to_dict(self) -> dict[str, Any]:
        result: dict[str, Any] = {
            "command": self.command,
            "inputs": dict(self.inputs),
        }
        if self.seed is not None:
            result["seed"] = self.seed
        result.update(to_json_value(self.values))
        result["checks"] = [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
        ]
        result["passed"] = self.passed
        if self.error is not None:
            result["error"] = self.error
        return result

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    def summary_lines(self) -> list[str]:
        lines = [f"{'✅' if c.passed else '❌'} {c.name}: {c.detail}" for c in self.checks]
        if self.error is not None:
            lines.append(f"❌ Error: {self.error}")
        elif self.passed:
            lines.append(f"✅ {self.command}: all {len(self.checks)} checks passed")
        else:
            lines.append(f"❌ {self.command}: {len(self.failed_checks)} of {len(self.checks)} checks failed")
        return lines
