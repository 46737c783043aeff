"""Check reports shared by the verification commands.

A Report is an ordered list of CheckResult rows with stable ids.  Statuses:
pass / fail / indeterminate / external-dependency.  Only "fail" makes a
report unsuccessful; indeterminate and external-dependency rows are listed
but do not fail a run.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exactmath import format_rational

PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"
EXTERNAL = "external-dependency"

SCHEMA_VERSION = 1


def jsonable(value):
    """Render values with exact rationals as 'p/q' strings, recursively."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    return str(value)


@dataclass
class CheckResult:
    id: str
    statement: str
    status: str
    value: object = None
    note: str = ""

    def as_dict(self) -> dict:
        d = {"id": self.id, "statement": self.statement, "status": self.status,
             "value": jsonable(self.value)}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, id: str, statement: str, ok: bool, value=None, note: str = "") -> CheckResult:
        r = CheckResult(id, statement, PASS if ok else FAIL, value, note)
        self.checks.append(r)
        return r

    def add_status(self, id: str, statement: str, status: str, value=None,
                   note: str = "") -> CheckResult:
        r = CheckResult(id, statement, status, value, note)
        self.checks.append(r)
        return r

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    @property
    def ok(self) -> bool:
        return not self.failures

    def __getitem__(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def as_dict(self) -> dict:
        return {"title": self.title,
                "checks": [c.as_dict() for c in self.checks],
                "ok": self.ok}

    def to_json(self, **extra) -> str:
        payload = {"schema_version": SCHEMA_VERSION, **self.as_dict(), **extra}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))
