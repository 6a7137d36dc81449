"""Validation reports: per-family check tallies plus violation witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field


class StructuralError(Exception):
    """Input is malformed (wrong shape / dangling data), as opposed to failing an axiom."""


class CapacityError(Exception):
    """A configured size bound was exceeded."""


@dataclass(frozen=True)
class Violation:
    family: str
    witness: tuple
    message: str = ""

    def __str__(self):
        msg = f": {self.message}" if self.message else ""
        return f"[{self.family}] witness={self.witness}{msg}"


@dataclass
class Report:
    """Outcome of an exhaustive axiom sweep.

    ``counts[family]`` is the number of instances checked for that diagram or
    axiom family; ``violations`` holds one entry per failed instance, carrying
    the full witness tuple.
    """

    counts: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def record(self, family: str, ok: bool, witness: tuple = (), message: str = "") -> bool:
        self.counts[family] = self.counts.get(family, 0) + 1
        if not ok:
            self.violations.append(Violation(family, witness, message))
        return ok

    def fail(self, family: str, witness: tuple = (), message: str = "") -> None:
        self.record(family, False, witness, message)

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for fam, n in other.counts.items():
            key = prefix + fam
            self.counts[key] = self.counts.get(key, 0) + n
        for v in other.violations:
            self.violations.append(Violation(prefix + v.family, v.witness, v.message))
        return self

    def families(self) -> dict:
        """Map family -> (checked, failed)."""
        failed = {}
        for v in self.violations:
            failed[v.family] = failed.get(v.family, 0) + 1
        return {fam: (n, failed.get(fam, 0)) for fam, n in sorted(self.counts.items())}

    def first(self, family: str):
        for v in self.violations:
            if v.family == family:
                return v
        return None

    def by_family(self, family: str) -> list:
        return [v for v in self.violations if v.family == family]

    def summary(self) -> str:
        lines = []
        for fam, (checked, failed) in self.families().items():
            status = "ok" if failed == 0 else "FAIL"
            line = f"{fam}: {status} ({checked - failed}/{checked})"
            if failed:
                line += f"  first witness: {self.first(fam).witness}"
            lines.append(line)
        if not lines:
            lines.append("(nothing checked)")
        return "\n".join(lines)
