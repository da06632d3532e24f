"""Check reports: named pass/fail/skip entries with concrete witnesses."""
from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import Mat

PASS, FAIL, SKIP = "pass", "fail", "skip"


class PrerequisiteFailed(RuntimeError):
    def __init__(self, what: str, report: CheckReport | None = None):
        super().__init__(f"prerequisite failed: {what}")
        self.what = what
        self.report = report


@dataclass
class Entry:
    name: str
    status: str
    witness: int | None = None
    lhs: list | None = None
    rhs: list | None = None
    probe: str | None = None
    dims: dict | None = None
    detail: str | None = None

    @property
    def ok(self) -> bool:
        return self.status != FAIL

    def to_json(self, field_=None) -> dict:
        out = {"name": self.name, "status": self.status}
        fmt = field_.format if field_ is not None else str
        if self.witness is not None:
            out["witness"] = self.witness
            out["lhs"] = [fmt(x) for x in self.lhs]
            out["rhs"] = [fmt(x) for x in self.rhs]
        if self.probe is not None:
            out["probe"] = self.probe
        if self.dims is not None:
            out["dims"] = self.dims
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def compare(name: str, lhs: Mat, rhs: Mat, probe: str | None = None) -> Entry:
    """Entry for an equality of two parallel composites, witnessed by the first differing column."""
    if lhs.shape != rhs.shape:
        return Entry(name, FAIL, probe=probe, detail=f"shapes differ: {lhs.shape} vs {rhs.shape}")
    j = lhs.first_difference(rhs)
    if j is None:
        return Entry(name, PASS, probe=probe)
    return Entry(name, FAIL, witness=j, lhs=lhs.column_list(j), rhs=rhs.column_list(j), probe=probe)


def verdict(name: str, ok: bool, detail: str | None = None, **kw) -> Entry:
    return Entry(name, PASS if ok else FAIL, detail=detail, **kw)


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)

    def add(self, entry: Entry) -> Entry:
        self.entries.append(entry)
        return entry

    def extend(self, other: CheckReport, prefix: str = "") -> CheckReport:
        for e in other.entries:
            e.name = prefix + e.name
            self.entries.append(e)
        return self

    def merge_probe(self, entry: Entry):
        """Keep one entry per name: the first failure wins over passes."""
        for i, e in enumerate(self.entries):
            if e.name == entry.name:
                if e.status == PASS and entry.status == FAIL:
                    self.entries[i] = entry
                return
        self.entries.append(entry)

    @property
    def ordered(self) -> list:
        return sorted(self.entries, key=lambda e: e.name)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    @property
    def failures(self) -> list:
        return [e for e in self.ordered if e.status == FAIL]

    def entry(self, name: str) -> Entry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def __contains__(self, name):
        return any(e.name == name for e in self.entries)

    def to_json(self, field_=None) -> list:
        return [e.to_json(field_) for e in self.ordered]
