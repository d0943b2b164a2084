"""JSON and Markdown rendering of claim results."""

from __future__ import annotations

import json
from typing import Optional

from ..parse import parse_ring_spec
from ..rings import build_ring
from .catalog import Catalog
from .verify import ClaimResult

TRUNCATED = "Z(2)[x,y]/(x^3,x*y,y^2)"

OPEN_QUESTIONS = [
    "Whether the equivalence between a complemented extended graph (when the classical and "
    "extended graphs differ) and the decomposition R = B x F_1 x ... x F_n persists for "
    "infinite rings is not decidable by finite enumeration; only finite rings are checked.",
]


def truncation_note() -> dict:
    """Nilpotents of Z(2)[x,y]/(x^3,x*y,y^2) versus those of the untruncated Z(2)[x,y]/(x^3,x*y).

    In the untruncated ring y is not nilpotent, so its nilradical is the span of x and x^2.
    The finite truncation adds every nilpotent involving y.
    """
    ring = build_ring(parse_ring_spec(TRUNCATED))
    nil = sorted(ring.nilradical)
    labels = [ring.label(e) for e in nil]
    without_y = [s for s in labels if "y" not in s]
    return {
        "ring": ring.descriptor,
        "nilradical": labels,
        "nilradical_without_y": without_y,
        "vertices": len(ring.zero_divisors),
        "remark": "the untruncated ring Z(2)[x,y]/(x^3,x*y) is infinite; its nilradical is "
        f"{{{', '.join(without_y)}}} while the truncation has {len(labels)} nilpotents",
    }


def preamble(catalog: Optional[Catalog]) -> dict:
    return {
        "catalog": catalog.recipe() if catalog is not None else None,
        "open_questions": OPEN_QUESTIONS,
        "truncation": truncation_note(),
    }


def render_report(results: list[ClaimResult], format: str = "json", catalog: Optional[Catalog] = None) -> str:
    results = sorted(results, key=lambda r: r.claim)
    head = preamble(catalog)
    if format == "json":
        doc = {"preamble": head, "results": [r.to_dict() for r in results]}
        return json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if format == "md":
        return _markdown(results, head)
    raise ValueError(f"unknown report format {format!r}")


def parse_report(text: str) -> list[ClaimResult]:
    doc = json.loads(text)
    return [ClaimResult.from_dict(d) for d in doc["results"]]


def _cell(s) -> str:
    return str(s).replace("|", "\\|")


def _markdown(results: list[ClaimResult], head: dict) -> str:
    lines = ["# Claim verification report", ""]
    cat = head["catalog"]
    if cat:
        lines += [f"Catalog: {cat['entries']} rings ({cat['note']}).", ""]
        lines += [f"- {part}" for part in cat["recipe"]]
        lines.append("")
    lines += ["Open questions:", ""]
    lines += [f"- {q}" for q in head["open_questions"]]
    lines += ["", f"Truncation: {head['truncation']['remark']}.", ""]
    lines += [
        "| claim | status | rings_checked | skipped | counterexamples | elapsed_ms | witness |",
        "|---|---|---|---|---|---|---|",
    ]
    for r in results:
        status = r.status + (" (vacuous)" if r.vacuous else "")
        if r.witness:
            w = r.witness
            wtext = f"{w['ring']}: {', '.join(w['elements']) or '-'}; {w['detail']}"
        else:
            wtext = ""
        lines.append(
            f"| {r.claim} | {status} | {r.rings_checked} | {r.skipped} | {r.counterexamples} "
            f"| {r.elapsed_ms} | {_cell(wtext)} |"
        )
    extras = [r for r in results if r.reason or r.notes]
    if extras:
        lines += ["", "## Notes", ""]
        for r in extras:
            if r.reason:
                lines.append(f"- {r.claim}: {r.reason}")
            for n in r.notes:
                lines.append(f"- {r.claim}: {n}")
    return "\n".join(lines) + "\n"
