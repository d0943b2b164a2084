"""Lazily computed facts about one catalog ring, shared by all claims."""

from __future__ import annotations

from collections import OrderedDict
from functools import cached_property
from typing import Optional

from .. import ringspec as rs
from ..graphs import ZeroDivisorGraph, build_graph
from ..parse import parse_ring_spec
from ..properties import ComplementedVerdict, is_uniquely_complemented, perp_set
from ..rings import FiniteRing, build_ring


class RingAnalysis:
    def __init__(self, spec: rs.RingSpec, ring: Optional[FiniteRing] = None):
        self.spec = spec
        self.text = spec.text
        if ring is not None:
            self.__dict__["ring"] = ring

    def __repr__(self) -> str:
        return f"<RingAnalysis {self.text}>"

    @cached_property
    def ring(self) -> FiniteRing:
        return build_ring(self.spec)

    @cached_property
    def classic(self) -> ZeroDivisorGraph:
        return build_graph(self.ring, "classic")

    @cached_property
    def extended(self) -> ZeroDivisorGraph:
        return build_graph(self.ring, "extended")

    @cached_property
    def verdict(self) -> ComplementedVerdict:
        return is_uniquely_complemented(self.extended)

    @cached_property
    def classic_verdict(self) -> ComplementedVerdict:
        return is_uniquely_complemented(self.classic)

    @property
    def complemented(self) -> bool:
        return self.verdict.complemented

    @property
    def uniquely(self) -> bool:
        return bool(self.verdict.uniquely_complemented)

    @cached_property
    def differ(self) -> bool:
        return self.classic.edges != self.extended.edges

    @property
    def nil(self) -> frozenset[int]:
        return self.ring.nilradical

    @property
    def nil_star(self) -> list[int]:
        return sorted(self.nil - {0})

    @property
    def zd(self) -> frozenset[int]:
        """``Z(R)*``."""
        return self.ring.zero_divisors

    @property
    def z_size(self) -> int:
        """``|Z(R)|`` counting 0."""
        return len(self.ring.zero_divisors) + 1

    @property
    def reduced(self) -> bool:
        return self.ring.is_reduced()

    def perp(self, v: int) -> frozenset[int]:
        return perp_set(self.extended, v)

    def labels(self, *elements: int) -> list[str]:
        return [self.ring.label(e) for e in elements]


class Analyzer:
    """Bounded cache of :class:`RingAnalysis` keyed by spec text."""

    def __init__(self, capacity: int = 48):
        self.capacity = capacity
        self._cache: "OrderedDict[str, RingAnalysis]" = OrderedDict()

    def get(self, spec: rs.RingSpec | str) -> RingAnalysis:
        if isinstance(spec, str):
            spec = parse_ring_spec(spec)
        key = spec.text
        hit = self._cache.get(key)
        if hit is not None:
            self._cache.move_to_end(key)
            return hit
        value = RingAnalysis(spec)
        self._cache[key] = value
        if len(self._cache) > self.capacity:
            self._cache.popitem(last=False)
        return value
