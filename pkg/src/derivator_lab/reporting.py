"""Check records and machine-readable reports shared by all verdict-producing
operations.  Reports are deterministic for fixed inputs and seed; wall-clock
timing is kept out of the byte-stable payload unless explicitly requested."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    group: str
    name: str
    passed: bool
    witness: str = ""

    def as_dict(self) -> dict:
        d = {"group": self.group, "name": self.name, "passed": self.passed}
        if self.witness:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    command: str
    scope: dict = field(default_factory=dict)
    checks: list[CheckRecord] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    seed: int = 0
    timing_s: float | None = None

    def add(self, group: str, name: str, passed: bool, witness: str = "") -> CheckRecord:
        rec = CheckRecord(group, name, passed, witness)
        self.checks.append(rec)
        return rec

    def note(self, text: str):
        self.notes.append(text)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckRecord]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        groups: dict[str, list[CheckRecord]] = {}
        for c in self.checks:
            groups.setdefault(c.group, []).append(c)
        return {g: {"total": len(cs), "failed": sum(not c.passed for c in cs)}
                for g, cs in sorted(groups.items())}

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "command": self.command,
            "seed": self.seed,
            "scope": self.scope,
            "passed": self.passed,
            "summary": self.summary(),
            "checks": [c.as_dict() for c in self.checks],
            "notes": self.notes,
            "timing_s": self.timing_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        lines = [f"== {self.command} (seed={self.seed}) =="]
        for key, val in sorted(self.scope.items()):
            lines.append(f"   scope {key}: {val}")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            suffix = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"{mark} {c.group}: {c.name}{suffix}")
        for n in self.notes:
            lines.append(f"note: {n}")
        lines.append(f"result: {'PASS' if self.passed else 'FAIL'} "
                     f"({len(self.checks)} checks, {len(self.failures())} failures)")
        return "\n".join(lines) + "\n"
