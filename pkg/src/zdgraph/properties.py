"""Orthogonality, complemented and uniquely complemented graphs.

``u ⊥ v`` means u and v are adjacent and the edge lies in no triangle, i.e. the
two open neighborhoods are disjoint.  A graph is complemented when every vertex
has an orthogonal; uniquely complemented when, in addition, any two orthogonals
of one vertex have the same open neighborhood.
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .graphs import ZeroDivisorGraph, _bits

_PERPS: "weakref.WeakKeyDictionary[ZeroDivisorGraph, tuple[int, ...]]" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class OrthogonalityReport:
    vertex: int
    perp_set: frozenset
    has_orthogonal: bool
    non_nilpotent_perp: frozenset


@dataclass(frozen=True)
class ComplementedVerdict:
    complemented: bool
    # None when only the complemented half was evaluated
    uniquely_complemented: Optional[bool]
    failure_witness: Optional[int] = None
    uniqueness_witness: Optional[Tuple[int, int, int]] = None


def perp_masks(graph: ZeroDivisorGraph) -> tuple[int, ...]:
    """Per vertex position, the bitmask of its orthogonals."""
    cached = _PERPS.get(graph)
    if cached is None:
        masks = graph.masks
        cached = tuple(
            sum(1 << j for j in _bits(m) if not (masks[j] & m))
            for m in masks
        )
        _PERPS[graph] = cached
    return cached


def are_orthogonal(graph: ZeroDivisorGraph, u: int, v: int) -> bool:
    nu, nv = graph.neighbor_mask(u), graph.neighbor_mask(v)
    return u != v and graph.adjacent(u, v) and not (nu & nv)


def perp_set(graph: ZeroDivisorGraph, v: int) -> frozenset[int]:
    return graph.ids(perp_masks(graph)[graph.position(v)])


def orthogonality_report(graph: ZeroDivisorGraph, v: int) -> OrthogonalityReport:
    perp = perp_set(graph, v)
    nil = graph.ring.nilradical
    return OrthogonalityReport(v, perp, bool(perp), frozenset(u for u in perp if u not in nil))


def is_complemented(graph: ZeroDivisorGraph) -> ComplementedVerdict:
    """Every vertex has an orthogonal; the empty graph is complemented vacuously."""
    for v, pm in zip(graph.vertices, perp_masks(graph)):
        if not pm:
            return ComplementedVerdict(False, False, failure_witness=v)
    return ComplementedVerdict(True, None)


def neighborhoods_coincide(graph: ZeroDivisorGraph, u: int, w: int) -> bool:
    """``u ~ w``: literal equality of open neighborhoods."""
    return graph.neighbor_mask(u) == graph.neighbor_mask(w)


def neighborhoods_coincide_punctured(graph: ZeroDivisorGraph, u: int, w: int) -> bool:
    """``N(u) minus {w}`` equals ``N(w) minus {u}``; tolerates an edge between u and w."""
    bu, bw = 1 << graph.position(u), 1 << graph.position(w)
    return graph.neighbor_mask(u) & ~bw == graph.neighbor_mask(w) & ~bu


def is_uniquely_complemented(
    graph: ZeroDivisorGraph,
    coincide: Callable[[ZeroDivisorGraph, int, int], bool] = neighborhoods_coincide,
) -> ComplementedVerdict:
    base = is_complemented(graph)
    if not base.complemented:
        return base
    verts = graph.vertices
    for k, pm in enumerate(perp_masks(graph)):
        members = [verts[j] for j in _bits(pm)]
        if coincide is neighborhoods_coincide:
            # an equivalence relation: comparing against one member suffices
            pairs = ((members[0], w) for w in members[1:])
        else:
            pairs = ((u, w) for i, u in enumerate(members) for w in members[i + 1:])
        for u, w in pairs:
            if not coincide(graph, u, w):
                return ComplementedVerdict(True, False, uniqueness_witness=(verts[k], u, w))
    return ComplementedVerdict(True, True)
