"""Pass/fail reporting shared by the verification routines.

Failures are data, not exceptions: a check that misses is recorded with the
first offending position and the sweep continues, so a transcription error
in one row cannot hide later ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class Check:
    name: str
    n: int
    ok: bool
    detail: str = ""


@dataclass
class Report:
    target: str
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, check: Check) -> None:
        self.checks.append(check)

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok" if c.ok else "FAIL"
            suffix = f" ({c.detail})" if c.detail else ""
            out.append(f"{self.target}: {c.name} n={c.n}: {status}{suffix}")
        out.append(f"{self.target}: {'PASS' if self.ok else 'FAIL'}")
        return out

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "n": c.n, "ok": c.ok, "detail": c.detail}
                for c in self.checks
            ],
        }


def merge_reports(target: str, parts: Iterable[Report]) -> Report:
    merged = Report(target)
    for part in parts:
        merged.extend(part)
    return merged
