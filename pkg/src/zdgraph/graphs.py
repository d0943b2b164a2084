"""Classical and extended zero-divisor graphs.

Vertices are the nonzero zero-divisors of a ring, identified by element id.
Adjacency is stored as one Python-int bitmask per vertex, indexed by vertex
position, which keeps neighborhood intersections cheap.
"""

from __future__ import annotations

import json
import math
from collections import deque
from functools import cached_property
from typing import Iterable, Literal, Optional, Sequence

import numpy as np

from .errors import UnknownVertex
from .rings import FiniteRing

Flavor = Literal["classic", "extended"]
FLAVORS = ("classic", "extended")


def _row_mask(row: np.ndarray) -> int:
    return int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little")


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class ZeroDivisorGraph:
    def __init__(self, ring: FiniteRing, flavor: Flavor, vertices: Sequence[int], masks: Sequence[int]):
        self.ring = ring
        self.flavor = flavor
        self.vertices = tuple(vertices)
        self.masks = tuple(masks)
        self.index = {v: k for k, v in enumerate(self.vertices)}

    def __repr__(self) -> str:
        return f"<ZeroDivisorGraph {self.flavor} {self.ring_descriptor} |V|={len(self.vertices)}>"

    @property
    def ring_descriptor(self) -> str:
        return self.ring.descriptor

    def __len__(self) -> int:
        return len(self.vertices)

    def position(self, v: int) -> int:
        try:
            return self.index[v]
        except KeyError:
            raise UnknownVertex(f"{v} is not a vertex of {self!r}") from None

    def ids(self, mask: int) -> frozenset[int]:
        return frozenset(self.vertices[k] for k in _bits(mask))

    def mask_of(self, vertices: Iterable[int]) -> int:
        m = 0
        for v in vertices:
            m |= 1 << self.position(v)
        return m

    def neighbor_mask(self, v: int) -> int:
        return self.masks[self.position(v)]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.ids(self.neighbor_mask(v))

    def degree(self, v: int) -> int:
        return self.neighbor_mask(v).bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.neighbor_mask(u) >> self.position(v) & 1)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        out = []
        for k, v in enumerate(self.vertices):
            for j in _bits(self.masks[k] >> (k + 1)):
                out.append((v, self.vertices[k + 1 + j]))
        return tuple(sorted(out))

    def is_end(self, v: int) -> bool:
        return self.degree(v) == 1

    def ends(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if self.is_end(v))

    # -- structure -------------------------------------------------------
    def shortest_cycle(self) -> Optional[tuple[int, ...]]:
        """A cycle of minimum length, as a vertex sequence, or None for a forest.

        BFS from every root; a non-tree edge (u, w) closes a walk of length
        d(u) + d(w) + 1, and the minimum over all roots is a simple cycle.
        """
        n = len(self.vertices)
        adj = [list(_bits(m)) for m in self.masks]
        best: Optional[tuple[int, int, int, list, list]] = None
        for root in range(n):
            dist = [-1] * n
            parent = [-1] * n
            dist[root] = 0
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if best is not None and 2 * dist[u] >= best[0]:
                    break
                for w in adj[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif w != parent[u]:
                        length = dist[u] + dist[w] + 1
                        if best is None or length < best[0]:
                            best = (length, u, w, parent[:], dist[:])
        if best is None:
            return None
        _, u, w, parent, _ = best

        def path(x):
            out = [x]
            while parent[out[-1]] >= 0:
                out.append(parent[out[-1]])
            return out

        left, right = path(u), path(w)
        cycle = left[::-1] + right[:-1]
        return tuple(self.vertices[k] for k in cycle)

    def girth(self) -> float:
        cycle = self.shortest_cycle()
        return math.inf if cycle is None else len(cycle)

    def is_complete_bipartite(self) -> bool:
        if not self.vertices:
            return False
        everything = (1 << len(self.vertices)) - 1
        side_b = self.masks[0]
        side_a = everything & ~side_b
        if not side_b:
            return False
        for k, m in enumerate(self.masks):
            expected = side_b if side_a >> k & 1 else side_a
            if m != expected:
                return False
        return True

    # -- export ----------------------------------------------------------
    def to_dot(self) -> str:
        label = self.ring.label
        lines = ["graph G {", f"  // {self.flavor} zero-divisor graph of {self.ring_descriptor}"]
        lines += [f'  "{label(v)}";' for v in self.vertices]
        lines += [f'  "{label(u)}" -- "{label(v)}";' for u, v in self.edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        label = self.ring.label
        payload = {
            "ring": self.ring_descriptor,
            "flavor": self.flavor,
            "vertices": [label(v) for v in self.vertices],
            "edges": [[label(u), label(v)] for u, v in self.edges],
        }
        return json.dumps(payload, indent=2) + "\n"


def export_dot(graph: ZeroDivisorGraph) -> str:
    return graph.to_dot()


def export_json(graph: ZeroDivisorGraph) -> str:
    return graph.to_json()


def power_matrix(ring: FiniteRing, rows: Sequence[int]) -> np.ndarray:
    """``P[k, a] = 1`` iff ``a`` is a nonzero power of ``rows[k]``."""
    P = np.zeros((len(rows), ring.order))
    for k, x in enumerate(rows):
        P[k, list(ring.power_profiles[x].nonzero_powers)] = 1.0
    return P


def build_graph(ring: FiniteRing, flavor: Flavor = "extended") -> ZeroDivisorGraph:
    """Γ(R) (``classic``: xy = 0) or Γ̄(R) (``extended``: x^n y^m = 0 with both powers nonzero)."""
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}, got {flavor!r}")
    verts = sorted(ring.zero_divisors)
    if not verts:
        return ZeroDivisorGraph(ring, flavor, (), ())
    idx = np.array(verts)
    zero = ring.mul_table == 0
    if flavor == "classic":
        adj = zero[np.ix_(idx, idx)].copy()
    else:
        # some nonzero power of x times some nonzero power of y is zero
        P = power_matrix(ring, verts)
        adj = (P @ zero.astype(np.float64) @ P.T) > 0.5
    np.fill_diagonal(adj, False)
    return ZeroDivisorGraph(ring, flavor, verts, [_row_mask(r) for r in adj])


def graphs_differ(ring: FiniteRing) -> bool:
    return build_graph(ring, "classic").edges != build_graph(ring, "extended").edges
