"""Check reports: machine-readable verification results with witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


class VerificationError(Exception):
    """A mathematical check failed; carries the offending report."""

    def __init__(self, report: "Report"):
        self.report = report
        first = report.first_failure()
        msg = report.task
        if first is not None:
            msg = f"{report.task}: {first.name} failed"
            if first.witness:
                msg += f" (witness {first.witness})"
        super().__init__(msg)


class UnsupportedInstanceError(Exception):
    """Instance hypotheses do not hold (e.g. a non-normal Hopf subalgebra)."""


@dataclass
class Check:
    name: str
    ok: bool
    witness: dict | None = None

    def to_json(self):
        d = {"check": self.name, "status": "pass" if self.ok else "fail"}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class Report:
    task: str
    checks: list = field(default_factory=list)
    dims: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, witness: dict | None = None):
        self.checks.append(Check(name, ok, None if ok else witness))
        return ok

    def require(self, name: str, ok: bool, witness: dict | None = None):
        """Record the check and raise immediately on failure."""
        self.add(name, ok, witness)
        if not ok:
            raise VerificationError(self)

    def merge(self, other: "Report", prefix: str = ""):
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.ok, c.witness))
        self.dims.update(other.dims)
        return self

    def first_failure(self) -> Check | None:
        for c in self.checks:
            if not c.ok:
                return c
        return None

    def raise_if_failed(self):
        if not self.ok:
            raise VerificationError(self)
        return self

    def to_json(self):
        return {
            "task": self.task,
            "ok": self.ok,
            "dims": {k: self.dims[k] for k in sorted(self.dims)},
            "checks": [c.to_json() for c in self.checks],
        }

    def render_json(self) -> str:
        """Canonical, byte-stable JSON rendering."""
        return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        lines = [f"[{'ok' if self.ok else 'FAIL'}] {self.task}"]
        for c in self.checks:
            mark = "pass" if c.ok else "FAIL"
            line = f"  {mark}  {c.name}"
            if c.witness:
                line += f"  witness={c.witness}"
            lines.append(line)
        if self.dims:
            lines.append("  dims: " + ", ".join(f"{k}={v}" for k, v in sorted(self.dims.items())))
        return "\n".join(lines) + "\n"
