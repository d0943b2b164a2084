"""Run registered claims over a catalog and collect per-claim results."""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .analysis import Analyzer
from .catalog import Catalog
from .claims import CLAIMS, Note, Violation, get_claim, instance_from_witness, instances

MAX_NOTES = 20


@dataclass
class ClaimResult:
    claim: str
    status: str  # pass | counterexample | skipped
    rings_checked: int = 0
    skipped: int = 0
    witness: Optional[dict] = None
    elapsed_ms: int = 0
    counterexamples: int = 0
    vacuous: bool = False
    notes: list = field(default_factory=list)
    reason: Optional[str] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ClaimResult":
        return cls(**d)


class _Tally:
    def __init__(self, claim_id: str):
        self.claim = get_claim(claim_id)
        self.checked = 0
        self.skipped = 0
        self.counterexamples = 0
        self.witness = None
        self.notes: list[str] = []
        self.note_count = 0
        self.elapsed = 0.0

    def feed(self, inst) -> None:
        t0 = time.perf_counter()
        outcome = self.claim.check(inst)
        self.elapsed += time.perf_counter() - t0
        if outcome is None:
            self.skipped += 1
            return
        self.checked += 1
        if isinstance(outcome, Violation):
            self.counterexamples += 1
            if self.witness is None:
                self.witness = {
                    **inst.witness_fields(),
                    "elements": list(outcome.elements),
                    "detail": outcome.detail,
                }
        elif isinstance(outcome, Note):
            self.note_count += 1
            if len(self.notes) < MAX_NOTES:
                self.notes.append(outcome.detail)

    def result(self) -> ClaimResult:
        c = self.claim
        if self.counterexamples:
            status, reason = "counterexample", None
        elif c.skip_reason:
            status, reason = "skipped", c.skip_reason
        else:
            status, reason = "pass", None
        notes = list(self.notes)
        if self.note_count > len(notes):
            notes.append(f"... {self.note_count - len(notes)} more")
        return ClaimResult(
            claim=c.id,
            status=status,
            rings_checked=self.checked,
            skipped=self.skipped,
            witness=self.witness,
            elapsed_ms=int(round(self.elapsed * 1000)),
            counterexamples=self.counterexamples,
            vacuous=self.checked == 0,
            notes=notes,
            reason=reason,
        )


def verify_all(
    catalog: Catalog,
    claim_ids: Optional[Iterable[str]] = None,
    analyzer: Optional[Analyzer] = None,
) -> list[ClaimResult]:
    """Results sorted by claim id.  Each instance is visited once for all claims sharing its scope."""
    ids = list(CLAIMS) if claim_ids is None else list(dict.fromkeys(claim_ids))
    tallies = {cid: _Tally(cid) for cid in ids}
    analyzer = analyzer or Analyzer()
    by_scope: dict[str, list[_Tally]] = {}
    for t in tallies.values():
        by_scope.setdefault(t.claim.scope, []).append(t)
    for scope, group in by_scope.items():
        for inst in instances(scope, catalog, analyzer):
            for t in group:
                t.feed(inst)
    return sorted((t.result() for t in tallies.values()), key=lambda r: r.claim)


def verify_claim(claim_id: str, catalog: Catalog, analyzer: Optional[Analyzer] = None) -> ClaimResult:
    get_claim(claim_id)
    return verify_all(catalog, [claim_id], analyzer)[0]


def reproduce_witness(claim_id: str, witness: dict) -> bool:
    """Rebuild the witnessed ring(s) from scratch and confirm the violation recurs."""
    claim = get_claim(claim_id)
    inst = instance_from_witness(claim, witness)
    return isinstance(claim.check(inst), Violation)
