"""Verification records and the JSON report schema."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, List, Optional

SCHEMA_VERSION = 1

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "discrepancy-reported"


@dataclass
class VerificationRecord:
    check_id: str
    anchor: str
    status: str
    witness: Optional[str] = None

    def to_dict(self) -> Dict:
        d = {"check-id": self.check_id, "anchor": self.anchor, "status": self.status}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def record(check_id: str, anchor: str, ok: bool, witness: str | None = None) -> VerificationRecord:
    return VerificationRecord(check_id, anchor, PASS if ok else FAIL,
                              None if ok else witness)


@dataclass
class ReportBundle:
    """A named batch of records plus free-form data tables."""

    records: List[VerificationRecord] = field(default_factory=list)
    data: Dict[str, object] = field(default_factory=dict)

    def add(self, rec: VerificationRecord):
        self.records.append(rec)

    def check(self, check_id: str, anchor: str, ok: bool, witness: str | None = None):
        self.add(record(check_id, anchor, ok, witness))

    def extend(self, other: "ReportBundle"):
        self.records.extend(other.records)
        self.data.update(other.data)

    @property
    def failed(self) -> List[VerificationRecord]:
        return [r for r in self.records if r.status == FAIL]

    def ok(self) -> bool:
        return not self.failed


def render_json(bundle: ReportBundle, config: Dict, seed: int | None = None) -> str:
    """Stable JSON: records sorted by check-id, keys sorted, fixed separators."""
    meta = {"config": config, "seed": seed, "version": SCHEMA_VERSION}
    records = sorted((r.to_dict() for r in bundle.records), key=lambda d: d["check-id"])
    doc = {"meta": meta, "records": records}
    if bundle.data:
        doc["data"] = bundle.data
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
