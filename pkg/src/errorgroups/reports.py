"""Claim reports: ``{case, claims: [{id, paper_anchor, status, witness}]}``.

A claim is ``verified``, ``failed``, ``flagged`` (a known discrepancy that is
reported but does not fail the run) or ``skipped``.  ``paper_anchor`` holds
the mathematical statement being checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

STATUSES = ("verified", "failed", "flagged", "skipped")


@dataclass
class Claim:
    id: str
    paper_anchor: str
    status: str
    witness: Any = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @classmethod
    def check(cls, id: str, anchor: str, ok: bool, witness: Any = None) -> Claim:
        return cls(id, anchor, "verified" if ok else "failed", witness)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "paper_anchor": self.paper_anchor,
            "status": self.status,
            "witness": self.witness,
        }


@dataclass
class Report:
    case: str
    claims: list[Claim] = field(default_factory=list)
    details: Optional[dict] = None

    def add(self, claim: Claim) -> Claim:
        self.claims.append(claim)
        return claim

    @property
    def failed(self) -> list[Claim]:
        return [c for c in self.claims if c.status == "failed"]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        out: dict = {"case": self.case, "claims": [c.to_json() for c in self.claims]}
        if self.details is not None:
            out["details"] = self.details
        return out

    @classmethod
    def from_json(cls, data: dict) -> Report:
        claims = [Claim(**c) for c in data["claims"]]
        return cls(data["case"], claims, data.get("details"))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        tag = {"verified": "PASS", "failed": "FAIL", "flagged": "FLAG", "skipped": "SKIP"}
        lines = [self.case]
        for c in self.claims:
            lines.append(f"  {tag[c.status]}  {c.id}: {c.paper_anchor}")
            if c.status != "verified" and c.witness is not None:
                lines.append(f"        witness: {json.dumps(c.witness, ensure_ascii=False)}")
        n_ok = sum(c.status == "verified" for c in self.claims)
        lines.append(f"{n_ok}/{len(self.claims)} verified, {len(self.failed)} failed")
        return "\n".join(lines) + "\n"
