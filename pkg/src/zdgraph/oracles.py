"""Slow, obviously-correct reference computations used to cross-check the fast paths."""

from __future__ import annotations

from .rings import FiniteRing


def brute_zero_divisors(ring: FiniteRing) -> list[int]:
    n = ring.order
    return [x for x in range(1, n) if any(ring.mul(x, y) == 0 for y in range(1, n))]


def brute_powers(ring: FiniteRing, x: int) -> list[int]:
    """``x^1 .. x^order`` by repeated scalar multiplication (may contain zeros and repeats)."""
    out, p = [], x
    for _ in range(ring.order):
        out.append(p)
        p = ring.mul(p, x)
    return out


def brute_extended_edges(ring: FiniteRing) -> set[tuple[int, int]]:
    """Edges ``u < v`` such that ``u^n v^m = 0`` with ``u^n, v^m != 0`` for some ``n, m <= order``."""
    verts = brute_zero_divisors(ring)
    # repeats change nothing, so each power list is deduplicated
    powers = {x: sorted({p for p in brute_powers(ring, x) if p != 0}) for x in verts}
    edges = set()
    for i, u in enumerate(verts):
        for v in verts[i + 1:]:
            if any(ring.mul(a, b) == 0 for a in powers[u] for b in powers[v]):
                edges.add((u, v))
    return edges


def brute_classic_edges(ring: FiniteRing) -> set[tuple[int, int]]:
    verts = brute_zero_divisors(ring)
    return {(u, v) for i, u in enumerate(verts) for v in verts[i + 1:] if ring.mul(u, v) == 0}


def brute_complemented(ring: FiniteRing, edges: set[tuple[int, int]]) -> bool:
    verts = brute_zero_divisors(ring)
    nbr = {v: set() for v in verts}
    for u, v in edges:
        nbr[u].add(v)
        nbr[v].add(u)
    return all(any(not (nbr[u] & nbr[w]) for w in nbr[u]) for u in verts)
