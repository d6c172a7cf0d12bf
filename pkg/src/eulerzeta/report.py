"""Machine-readable verification reports."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from typing import List, Optional

PASS = "PASS"
FAIL = "FAIL"


@dataclass
class ReportEntry:
    quantity: str
    method: str
    digits: int
    value: str
    error_bound: str
    terms_or_level: int
    elapsed_ms: int
    status: str = PASS
    # comparison entries also record what they were checked against
    reference: Optional[str] = None
    reference_method: Optional[str] = None
    difference: Optional[str] = None
    tolerance: Optional[str] = None

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL):
            raise ValueError(f"status must be PASS or FAIL, got {self.status!r}")
        if self.status == FAIL and self.reference is None:
            raise ValueError("a FAIL entry must carry the value it was compared with")


@dataclass
class Report:
    entries: List[ReportEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.status == PASS for e in self.entries)

    def to_dict(self) -> dict:
        return {"entries": [asdict(e) for e in self.entries]}

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        known = {f.name for f in fields(ReportEntry)}
        entries = []
        for raw in data["entries"]:
            unknown = set(raw) - known
            if unknown:
                raise ValueError(f"unknown report fields: {sorted(unknown)}")
            entries.append(ReportEntry(**raw))
        return cls(entries)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))
