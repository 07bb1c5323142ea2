"""Pass/fail reports shared by all verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    identity: str
    subject: str
    passed: bool
    lhs: str = ""
    rhs: str = ""


@dataclass
class Report:
    """Ordered collection of identity checks.

    Text output has one line per identity: PASS/FAIL, how many subjects were
    checked, and for a failure the first counterexample with both sides.
    """

    title: str
    checks: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, identity, subject, passed, lhs="", rhs=""):
        self.checks.append(Check(identity, str(subject), bool(passed), str(lhs), str(rhs)))
        return passed

    def note(self, text: str):
        self.notes.append(text)

    def extend(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.identity, c.subject, c.passed, c.lhs, c.rhs))
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def first_failure(self, identity: str | None = None):
        for c in self.checks:
            if not c.passed and (identity is None or c.identity == identity):
                return c
        return None

    def identities(self) -> list:
        seen = []
        for c in self.checks:
            if c.identity not in seen:
                seen.append(c.identity)
        return seen

    def summary(self) -> list:
        rows = []
        for ident in self.identities():
            group = [c for c in self.checks if c.identity == ident]
            bad = [c for c in group if not c.passed]
            rows.append({
                "identity": ident,
                "status": "FAIL" if bad else "PASS",
                "checked": len(group),
                "failed": len(bad),
                "counterexample": None if not bad else {
                    "subject": bad[0].subject, "lhs": bad[0].lhs, "rhs": bad[0].rhs,
                },
            })
        return rows

    def to_text(self) -> str:
        lines = [f"== {self.title} =="]
        for row in self.summary():
            line = f"{row['status']} {row['identity']} ({row['checked']} checked"
            if row["failed"]:
                ce = row["counterexample"]
                line += f", {row['failed']} failed) first counterexample at {ce['subject']}: lhs = {ce['lhs']} ; rhs = {ce['rhs']}"
            else:
                line += ")"
            lines.append(line)
        lines.extend(f"note: {n}" for n in self.notes)
        n_pass = sum(c.passed for c in self.checks)
        lines.append(f"{'PASS' if self.passed else 'FAIL'}: {n_pass}/{len(self.checks)} checks passed")
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "pass_count": sum(c.passed for c in self.checks),
            "check_count": len(self.checks),
            "results": self.summary(),
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    def __str__(self):
        return self.to_text()
