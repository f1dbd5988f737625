"""Check reports returned by the theorem-verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Named boolean checks plus supporting data.

    ``ok`` is the conjunction of ``checks``.  ``flags`` are observations that
    are reported but never fail the report.
    """

    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)
    flags: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def check(self, key: str, value: bool) -> bool:
        self.checks[key] = bool(value)
        return bool(value)

    def failed(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def __bool__(self) -> bool:
        return self.ok

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        line = f"{self.name}: {status}"
        if not self.ok:
            line += " failed=" + ",".join(self.failed())
        if self.flags:
            line += " flags=" + ";".join(self.flags)
        return line
