"""Deterministic, generative catalogs of finite commutative rings."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass, field
from math import prod
from typing import Iterator, Optional

from .. import ringspec as rs
from ..parse import parse_ring_spec
from ..rings import build_ring

LOCAL_PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32)
GF_ORDERS = (4, 8, 9, 16)

NAMED_QUOTIENTS = (
    "Z(2)[x]/(x^2)",
    "Z(2)[x]/(x^3)",
    "Z(3)[x]/(x^2)",
    "Z(2)[x,y]/(x^3,x*y,y^2)",
    "Z(2)[x,y]/(x^2,x*y,y^2)",
    "Z(2)[x,y]/(x^2,y^2)",
    "Z(3)[x,y]/(x^2,x*y,y^2)",
    "Z(2)[x]/(x^4)",
    "Z(3)[x]/(x^3)",
    "Z(5)[x]/(x^2)",
    "Z(2)[x,y]/(x^3,x*y,y^3)",
    "Z(2)[x,y]/(x^2,y^3)",
    "Z(2)[x,y,z]/(x^2,y^2,z^2)",
    "Z(2)[x,y,z]/(x^2,y^2,z^2,x*y,x*z,y*z)",
)

# multiplied by each named quotient to widen the product-pair claims
SMALL_FIELDS = ("Z(2)", "Z(3)", "GF(4)")

IDEALIZATION_BASES = (
    "Z(2)",
    "Z(4)",
    "Z(6)",
    "Z(8)",
    "Z(10)",
    "Z(12)",
    "Z(2)[x]/(x^2)",
    "Z(2) x Z(2)",
    "Z(2) x Z(3)",
    "Z(2) x Z(5)",
    "Z(2) x GF(4)",
    "Z(2) x Z(4)",
    "Z(2) x Z(9)",
    "Z(2) x Z(2) x Z(2)",
    "Z(2) x Z(2) x Z(3)",
    "Z(2) x Z(2)[x]/(x^2)",
    "Z(3) x Z(4)",
    "GF(4) x Z(4)",
)


@dataclass(frozen=True)
class CatalogBounds:
    max_order: int = 256
    max_n: Optional[int] = None
    max_product_arity: int = 3
    prime_powers: tuple[int, ...] = LOCAL_PRIME_POWERS
    gf_orders: tuple[int, ...] = GF_ORDERS
    include_zn: bool = True
    include_products: bool = True
    include_quotients: bool = True
    include_idealizations: bool = True

    @property
    def zn_limit(self) -> int:
        return self.max_order if self.max_n is None else self.max_n


@dataclass(frozen=True)
class Catalog:
    entries: tuple = ()
    bounds: CatalogBounds = field(default_factory=CatalogBounds)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[rs.RingSpec]:
        return iter(self.entries)

    def texts(self) -> list[str]:
        return [e.text for e in self.entries]

    def recipe(self) -> dict:
        """How the entries were generated; goes into report headers."""
        b = self.bounds
        parts = []
        if b.include_zn:
            parts.append(f"Z(n) for 2 <= n <= {b.zn_limit}")
        if b.include_products:
            parts.append(
                f"products of 1..{b.max_product_arity} factors drawn from Z(q) for q in "
                f"{list(b.prime_powers)}, GF(q) for q in {list(b.gf_orders)}, "
                "Z(2)[x]/(x^2), Z(2)[x]/(x^3), Z(3)[x]/(x^2)"
            )
        if b.include_quotients:
            parts.append("named monomial quotients, alone and times Z(2), Z(3), GF(4)")
        if b.include_idealizations:
            parts.append("R(+)R/I for a fixed base list and every maximal ideal I of index 2")
        return {
            "entries": len(self.entries),
            "bounds": asdict(b),
            "recipe": parts,
            "note": "generative sample, not a census of all finite rings of a given order",
        }


def local_factors(bounds: CatalogBounds) -> list[rs.RingSpec]:
    out: list[rs.RingSpec] = [rs.Zn(q) for q in bounds.prime_powers]
    out += [rs.gf(q) for q in bounds.gf_orders]
    out += [rs.truncated_poly(2, 2), rs.truncated_poly(2, 3), rs.truncated_poly(3, 2)]
    return out


def index_two_idealizations(base_text: str, max_order: int) -> list[rs.Idealization]:
    base_spec = parse_ring_spec(base_text)
    if 2 * base_spec.order > max_order:
        return []
    ring = build_ring(base_spec)
    out = []
    for ideal in ring.maximal_ideals():
        if 2 * len(ideal) == ring.order:
            gens = tuple(ring.label(g) for g in ring.ideal_generators(ideal))
            out.append(rs.Idealization(base_spec, gens))
    return out


def generate_catalog(bounds: CatalogBounds | None = None) -> Catalog:
    bounds = bounds or CatalogBounds()
    if bounds.max_order < 4:
        raise ValueError("max_order must be at least 4")
    candidates: list[rs.RingSpec] = []
    if bounds.include_zn:
        candidates += [rs.Zn(n) for n in range(2, bounds.zn_limit + 1)]
    if bounds.include_products:
        factors = [f for f in local_factors(bounds) if f.order <= bounds.max_order]
        candidates += [f for f in factors if not isinstance(f, rs.Zn)]
        for arity in range(2, bounds.max_product_arity + 1):
            for combo in itertools.combinations_with_replacement(factors, arity):
                if prod(f.order for f in combo) <= bounds.max_order:
                    candidates.append(rs.Product(combo))
    if bounds.include_quotients:
        for text in NAMED_QUOTIENTS:
            q = parse_ring_spec(text)
            if q.order <= bounds.max_order:
                candidates.append(q)
            for ftext in SMALL_FIELDS:
                f = parse_ring_spec(ftext)
                if q.order * f.order <= bounds.max_order:
                    candidates.append(rs.Product((q, f)))
    if bounds.include_idealizations:
        for text in IDEALIZATION_BASES:
            candidates += index_two_idealizations(text, bounds.max_order)

    seen: set[str] = set()
    entries = []
    for spec in candidates:
        if spec.text in seen:
            continue
        seen.add(spec.text)
        entries.append(spec)
    return Catalog(tuple(entries), bounds)


def catalog_from_texts(texts, bounds: CatalogBounds | None = None) -> Catalog:
    """A hand-picked catalog (deduplicated, order preserved)."""
    seen, entries = set(), []
    for t in texts:
        spec = parse_ring_spec(t) if isinstance(t, str) else t
        if spec.text not in seen:
            seen.add(spec.text)
            entries.append(spec)
    return Catalog(tuple(entries), bounds or CatalogBounds())
