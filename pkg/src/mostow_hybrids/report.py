"""Check records and the JSON / Markdown report renderings."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "mostow-hybrids-report/1"


@dataclass(frozen=True)
class Check:
    """One verified statement: stable id, what it anchors to, pass/fail."""

    id: str
    anchor: str
    passed: bool
    certificate: dict = field(default_factory=dict)

    @property
    def status(self):
        return "pass" if self.passed else "fail"


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    if isinstance(x, float):
        return "inf" if x == float("inf") else x
    return str(x)


def _cell(text):
    return text.replace("|", "\\|")


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def add(self, checks):
        if isinstance(checks, Check):
            checks = [checks]
        self.checks.extend(checks)
        return self

    @property
    def failures(self):
        return [c for c in self.checks if not c.passed]

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        return {"total": len(self.checks), "passed": len(self.checks) - len(self.failures), "failed": len(self.failures)}

    def sorted_checks(self):
        return sorted(self.checks, key=lambda c: c.id)

    def to_dict(self):
        return {
            "schema": SCHEMA_VERSION,
            "command": self.command,
            "summary": self.summary(),
            "notes": _jsonable(dict(sorted(self.notes.items()))),
            "checks": [
                {"id": c.id, "anchor": c.anchor, "status": c.status, "certificate": _jsonable(c.certificate)}
                for c in self.sorted_checks()
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=False, ensure_ascii=False) + "\n"

    def to_markdown(self):
        s = self.summary()
        lines = [
            f"# Report: `{self.command}`",
            "",
            f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed.",
            "",
        ]
        for k, v in sorted(self.notes.items()):
            lines.append(f"- **{k}**: {json.dumps(_jsonable(v), ensure_ascii=False, sort_keys=True)}")
        if self.notes:
            lines.append("")
        lines += [
            "| id | anchor | status | certificate |",
            "|---|---|---|---|",
        ]
        for c in self.sorted_checks():
            cert = json.dumps(_jsonable(c.certificate), ensure_ascii=False, sort_keys=True)
            lines.append(f"| {_cell(c.id)} | {_cell(c.anchor)} | {c.status} | {_cell(cert)} |")
        return "\n".join(lines) + "\n"
