from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from zdgraph import ringspec as rs
from zdgraph.errors import InfiniteQuotient, NonMonic, NotPrime, RingSpecError, SpecSyntaxError
from zdgraph.parse import parse_ring_spec


def test_product_with_prime_field():
    spec = parse_ring_spec("Z(4) x GF(3)")
    assert isinstance(spec, rs.Product)
    assert spec.factors[0] == rs.Zn(4)
    assert isinstance(spec.factors[1], rs.QuotUni) and spec.factors[1].p == 3
    assert spec.order == 12


def test_monomial_quotient_order():
    spec = parse_ring_spec("Z(2)[x,y]/(x^3, x*y, y^2)")
    assert isinstance(spec, rs.QuotMono)
    assert spec.order == 16
    assert spec.standard_monomials() == [(0, 0), (1, 0), (0, 1), (2, 0)]


def test_infinite_quotient_rejected():
    with pytest.raises(InfiniteQuotient):
        parse_ring_spec("Z(2)[x,y]/(x*y)")


def test_semantic_errors():
    with pytest.raises(NotPrime):
        parse_ring_spec("Z(4)[x]/(x^2)")
    with pytest.raises(NonMonic):
        parse_ring_spec("Z(3)[x]/(2x^2+1)")
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z(2)[x,y]/(x^2+y, y^2)")
    with pytest.raises(RingSpecError):
        parse_ring_spec("Z(1)")
    with pytest.raises(RingSpecError):
        parse_ring_spec("GF(6)")


@pytest.mark.parametrize("text,offset", [("Z(4) x", 6), ("Z(4", 3), ("Q(3)", 0), ("Z(4) y Z(2)", 5)])
def test_syntax_error_offsets(text, offset):
    with pytest.raises(SpecSyntaxError) as info:
        parse_ring_spec(text)
    assert info.value.offset == offset
    assert f"offset {offset}" in str(info.value)


def test_whitespace_and_case():
    assert parse_ring_spec("z(2)X gf(4)") == parse_ring_spec("Z(2) x GF(4)")
    assert parse_ring_spec(" Z ( 2 ) [ x ] / ( x ^ 2 ) ") == rs.truncated_poly(2, 2)
    assert parse_ring_spec("GF(2^3)") == rs.gf(8)


def test_grouping_keeps_nesting():
    spec = parse_ring_spec("(Z(2) x Z(3)) x Z(4)")
    assert isinstance(spec.factors[0], rs.Product)
    assert spec.text == "(Z(2) x Z(3)) x Z(4)"


def test_idealization_and_table(tmp_path):
    spec = parse_ring_spec("ideal(Z(4), (2))")
    assert isinstance(spec, rs.Idealization) and spec.order == 8
    path = tmp_path / "z2.json"
    path.write_text('{"order": 2, "zero": 0, "one": 1, "add": [[0,1],[1,0]], "mul": [[0,0],[0,1]]}')
    t = parse_ring_spec(f"table({path})")
    assert isinstance(t, rs.Table) and t.order == 2


EXAMPLES = [
    "Z(18)",
    "GF(16)",
    "Z(2) x Z(2) x Z(4)",
    "Z(3) x Z(2)[x]/(x^2)",
    "Z(2)[x,y]/(x^3,x*y,y^2)",
    "Z(3)[x]/(x^2+1)",
    "ideal(Z(2) x Z(3), ((0,1)))",
    "(Z(2) x Z(2)) x GF(4)",
]


@pytest.mark.parametrize("text", EXAMPLES)
def test_round_trip(text):
    spec = parse_ring_spec(text)
    assert parse_ring_spec(spec.text) == spec
    assert parse_ring_spec(spec.text).text == spec.text


def _leaf():
    return st.one_of(
        st.integers(2, 60).map(rs.Zn),
        st.sampled_from([4, 8, 9, 16, 25]).map(rs.gf),
        st.sampled_from([(2, 2), (2, 3), (3, 2), (5, 3)]).map(lambda pk: rs.truncated_poly(*pk)),
    )


specs = st.recursive(_leaf(), lambda inner: st.lists(inner, min_size=2, max_size=3).map(lambda fs: rs.Product(tuple(fs))), max_leaves=5)


@given(specs)
def test_round_trip_property(spec):
    assert parse_ring_spec(spec.text) == spec
