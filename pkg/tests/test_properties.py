from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from zdgraph import ringspec as rs
from zdgraph.graphs import ZeroDivisorGraph, build_graph
from zdgraph.oracles import brute_complemented, brute_extended_edges
from zdgraph.properties import (
    are_orthogonal,
    is_complemented,
    is_uniquely_complemented,
    neighborhoods_coincide,
    neighborhoods_coincide_punctured,
    orthogonality_report,
    perp_set,
)
from zdgraph.rings import build_ring


def ext(ring, text):
    return build_graph(ring(text), "extended")


def test_orthogonality_examples(ring):
    assert are_orthogonal(ext(ring, "Z(9)"), 3, 6)
    assert not are_orthogonal(ext(ring, "Z(25)"), 5, 10)
    g = ext(ring, "Z(6)")
    assert not are_orthogonal(g, 2, 4)


def test_perp_sets(ring):
    assert perp_set(ext(ring, "Z(18)"), 6) == set()
    assert perp_set(ext(ring, "Z(9)"), 3) == {6}
    r = ring("Z(2)[x,y]/(x^3,x*y,y^2)")
    assert perp_set(build_graph(r), r.element("x+y")) == set()


def test_orthogonality_report(ring):
    r = ring("Z(12)")
    rep = orthogonality_report(build_graph(r), 6)
    assert rep.has_orthogonal == bool(rep.perp_set)
    assert rep.non_nilpotent_perp == rep.perp_set - r.nilradical


def test_complemented_examples(ring):
    v = is_complemented(ext(ring, "Z(18)"))
    assert not v.complemented and v.failure_witness == 6
    assert is_complemented(ext(ring, "Z(2) x Z(2) x Z(4)")).complemented
    assert is_complemented(ext(ring, "Z(9)")).complemented
    assert not is_complemented(ext(ring, "Z(25)")).complemented
    g16 = ext(ring, "Z(16)")
    assert not is_complemented(g16).complemented


def test_empty_graph_is_vacuously_complemented(ring):
    v = is_uniquely_complemented(ext(ring, "Z(7)"))
    assert v.complemented and v.uniquely_complemented


def test_witness_iff_not_complemented(ring):
    for text in ("Z(18)", "Z(12)", "Z(36)", "Z(2) x Z(9)", "Z(30)"):
        v = is_complemented(ext(ring, text))
        assert (v.failure_witness is None) == v.complemented
        if not v.complemented:
            assert perp_set(ext(ring, text), v.failure_witness) == set()


def test_neighborhoods_coincide(ring):
    g = ext(ring, "Z(3) x Z(2)[x]/(x^2)")
    r = g.ring
    a, b = r.element("(1,0)"), r.element("(2,0)")
    assert neighborhoods_coincide(g, a, b)
    u, w = g.edges[0]
    assert not neighborhoods_coincide(g, u, w)
    g12 = ext(ring, "Z(12)")
    assert neighborhoods_coincide(g12, 2, 10) == (g12.neighbors(2) == g12.neighbors(10))


def test_punctured_relation_tolerates_shared_edge():
    r = build_ring(rs.Zn(2))
    # single edge 1-2: literal neighborhoods differ, punctured ones coincide
    g = ZeroDivisorGraph(r, "classic", [1, 2], [0b10, 0b01])
    assert not neighborhoods_coincide(g, 1, 2)
    assert neighborhoods_coincide_punctured(g, 1, 2)


def test_uniquely_complemented_examples(ring):
    assert is_uniquely_complemented(ext(ring, "Z(9)")).uniquely_complemented
    assert is_uniquely_complemented(ext(ring, "Z(2) x Z(2) x Z(4)")).uniquely_complemented
    v = is_uniquely_complemented(ext(ring, "Z(18)"))
    assert not v.complemented and not v.uniquely_complemented


def test_uniqueness_witness_shape():
    # path a-b-c-d with an extra pendant e on b: the orthogonals c and e of b differ
    r = build_ring(rs.Zn(2))
    edges = [(0, 1), (1, 2), (2, 3), (1, 4)]
    masks = [0] * 5
    for u, v in edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    g = ZeroDivisorGraph(r, "classic", [10, 11, 12, 13, 14], masks)
    verdict = is_uniquely_complemented(g)
    assert verdict.complemented and verdict.uniquely_complemented is False
    v, u, w = verdict.uniqueness_witness
    assert are_orthogonal(g, v, u) and are_orthogonal(g, v, w)
    assert g.neighbors(u) != g.neighbors(w)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 150))
def test_complemented_matches_brute_force(n):
    r = build_ring(rs.Zn(n))
    assert is_complemented(build_graph(r)).complemented == brute_complemented(r, brute_extended_edges(r))


@pytest.mark.parametrize("text", ["Z(2) x Z(2) x Z(4)", "GF(4) x Z(4)", "Z(2) x Z(9)", "Z(3) x Z(3) x Z(3)"])
def test_complemented_matches_brute_force_products(ring, text):
    r = ring(text)
    assert is_complemented(build_graph(r)).complemented == brute_complemented(r, brute_extended_edges(r))
