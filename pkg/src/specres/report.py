"""Pass/fail records shared by the verification functions and the CLI."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass(frozen=True)
class Check:
    """Outcome of one identity check; truthy iff it passed."""

    ok: bool
    detail: str = ""

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class CaseRecord:
    case: str
    order: int
    passed: bool
    detail: str = ""


@dataclass
class VerifyReport:
    suite: str
    cases: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def passed(self):
        return all(c.passed for c in self.cases)

    def add(self, case, order, check):
        self.cases.append(CaseRecord(case, order, bool(check), getattr(check, "detail", "")))

    def to_json(self):
        return {
            "suite": self.suite,
            "status": "pass" if self.passed else "fail",
            "notes": self.notes,
            "cases": [asdict(c) for c in self.cases],
        }


def first_difference(a, b, label="grade"):
    """Describe the first differing coefficient of two series, or ``None``."""
    if a.order != b.order:
        return f"truncation orders differ: {a.order} vs {b.order}"
    for n in range(a.order + 1):
        pa, pb = a.grade(n), b.grade(n)
        for w in sorted(set(pa) | set(pb), key=lambda w: (len(w), w)):
            if pa.get(w, 0) != pb.get(w, 0):
                return f"{label} {n}, word {list(w)}: {pa.get(w, 0)} != {pb.get(w, 0)}"
    return None


def compare(a, b, label="grade"):
    diff = first_difference(a, b, label)
    return Check(diff is None, diff or "")
