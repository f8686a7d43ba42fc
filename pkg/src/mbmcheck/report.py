"""Check reports: named diagram verdicts with basis-level witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .exactcore.morphism import LinearMap, first_difference, vector_labels

AXIOM = "axiom"
INFORMATIONAL = "informational"


@dataclass
class Witness:
    """The first domain basis vector on which two legs of a diagram differ."""

    index: int
    label: str
    lhs: dict
    rhs: dict

    def to_json(self):
        return {"index": self.index, "basis": self.label, "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class CheckEntry:
    name: str
    anchor: str
    passed: bool
    severity: str = AXIOM
    witness: object = None
    data: dict = dc_field(default_factory=dict)
    skipped: bool = False
    # the evaluated legs, kept so witnesses can be re-checked; never serialized
    lhs: LinearMap = dc_field(default=None, repr=False, compare=False)
    rhs: LinearMap = dc_field(default=None, repr=False, compare=False)

    @property
    def verdict(self):
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "fail"

    @property
    def counts(self):
        return self.severity == AXIOM and not self.skipped

    def to_json(self):
        out = {
            "name": self.name,
            "anchor": self.anchor,
            "severity": self.severity,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            w = self.witness
            out["witness"] = w.to_json() if hasattr(w, "to_json") else w
        if self.data:
            out["data"] = self.data
        return out


class CheckReport:
    def __init__(self, title, entries=None):
        self.title = title
        self.entries = list(entries or [])

    def add(self, entry: CheckEntry):
        self.entries.append(entry)
        return entry

    def extend(self, other: "CheckReport", prefix=None):
        for e in other.entries:
            if prefix:
                e = CheckEntry(
                    f"{prefix}/{e.name}", e.anchor, e.passed, e.severity, e.witness,
                    e.data, e.skipped, e.lhs, e.rhs,
                )
            self.entries.append(e)
        return self

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries if e.counts)

    def failures(self, include_informational=False):
        return [
            e for e in self.entries
            if not e.passed and not e.skipped and (include_informational or e.severity == AXIOM)
        ]

    def entry(self, name) -> CheckEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(f"no entry named {name!r} in report {self.title!r}")

    def names(self):
        return [e.name for e in self.entries]

    def to_json(self):
        return {
            "title": self.title,
            "verdict": "pass" if self.passed else "fail",
            "entries": [e.to_json() for e in self.entries],
        }

    def render_text(self):
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for e in self.entries:
            tag = "" if e.severity == AXIOM else f" [{e.severity}]"
            lines.append(f"  {e.verdict.upper():7s} {e.name}{tag}")
            if e.witness is not None and not e.passed:
                w = e.witness
                if isinstance(w, Witness):
                    lines.append(f"          at {w.label}: lhs={w.lhs} rhs={w.rhs}")
                else:
                    lines.append(f"          witness: {w}")
        return "\n".join(lines)

    def __repr__(self):
        bad = len(self.failures())
        return f"<CheckReport {self.title!r} {len(self.entries)} entries, {bad} failing>"


def compare(name, anchor, lhs: LinearMap, rhs: LinearMap, severity=AXIOM) -> CheckEntry:
    """Entry for the equality of two legs, with a witness on failure."""
    idx = first_difference(lhs, rhs)
    witness = None
    if idx is not None:
        fld = lhs.field
        witness = Witness(
            idx,
            lhs.dom.label(idx),
            vector_labels(lhs.column(idx), lhs.cod, fld),
            vector_labels(rhs.column(idx), rhs.cod, fld),
        )
    return CheckEntry(name, anchor, idx is None, severity, witness, lhs=lhs, rhs=rhs)


def fact(name, anchor, passed, severity=AXIOM, witness=None, data=None) -> CheckEntry:
    return CheckEntry(name, anchor, bool(passed), severity, witness, dict(data or {}))


def skipped(name, anchor, reason) -> CheckEntry:
    return CheckEntry(name, anchor, True, INFORMATIONAL, None, {"reason": reason}, skipped=True)


def matrix_strings(f: LinearMap):
    """Dense row-major matrix of scalar strings, for report data."""
    m = f.materialize()
    return [[m.field.format(v) for v in row] for row in m.rows()]
