"""Structured descriptions of ring constructions.

A :data:`RingSpec` is an immutable value; ``spec.text`` renders the canonical
grammar form accepted by :func:`zdgraph.parse.parse_ring_spec`, so printing and
re-parsing is a fixed point.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from math import prod
from pathlib import Path
from typing import Optional, Tuple, Union

from .errors import InfiniteQuotient, MalformedTable, NonMonic, NotPrime, RingSpecError
from .poly import format_term


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Return ``(p, k)`` with ``q == p**k`` and ``k >= 1``, else None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            while q % p == 0:
                q //= p
                k += 1
            return (p, k) if q == 1 else None
    return None


# Monic irreducibles (ascending coefficients), smallest under the base-p encoding
# of the lower coefficients with nonzero constant term.
GF_MODULI: dict[int, Tuple[int, Tuple[int, ...]]] = {
    4: (2, (1, 1, 1)),
    8: (2, (1, 1, 0, 1)),
    9: (3, (1, 0, 1)),
    16: (2, (1, 1, 0, 0, 1)),
    25: (5, (2, 0, 1)),
    27: (3, (1, 2, 0, 1)),
    32: (2, (1, 0, 1, 0, 0, 1)),
    49: (7, (1, 0, 1)),
    64: (2, (1, 1, 0, 0, 0, 0, 1)),
    81: (3, (2, 1, 0, 0, 1)),
    121: (11, (1, 0, 1)),
    125: (5, (1, 1, 0, 1)),
    128: (2, (1, 1, 0, 0, 0, 0, 0, 1)),
    169: (13, (2, 0, 1)),
    243: (3, (1, 2, 0, 0, 0, 1)),
    256: (2, (1, 1, 0, 1, 1, 0, 0, 0, 1)),
}


@dataclass(frozen=True)
class Zn:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise RingSpecError(f"Z({self.n}) has 1 = 0; rings need 1 != 0")

    @property
    def text(self) -> str:
        return f"Z({self.n})"

    @property
    def order(self) -> int:
        return self.n


@dataclass(frozen=True)
class QuotUni:
    """``Z_p[var]/(f)`` for a monic ``f``; ``modulus`` lists coefficients low to high."""

    p: int
    modulus: Tuple[int, ...]
    var: str = "x"
    alias: Optional[str] = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"coefficient modulus {self.p} is not prime")
        mod = tuple(c % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) < 2 or mod[-1] != 1:
            raise NonMonic(f"modulus {self.poly_text} must be monic of degree >= 1")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def poly_text(self) -> str:
        terms = [
            format_term(c, (e,), (self.var,))
            for e, c in reversed(list(enumerate(self.modulus)))
            if c
        ]
        return "+".join(terms) if terms else "0"

    @property
    def text(self) -> str:
        if self.alias:
            return self.alias
        return f"Z({self.p})[{self.var}]/({self.poly_text})"

    @property
    def order(self) -> int:
        return self.p ** self.degree


@dataclass(frozen=True)
class QuotMono:
    """``Z_p[vars]/(m_1, ..., m_k)`` with monomial generators as exponent tuples."""

    p: int
    variables: Tuple[str, ...]
    generators: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"coefficient modulus {self.p} is not prime")
        if not self.variables or len(set(self.variables)) != len(self.variables):
            raise RingSpecError("variables must be distinct and nonempty")
        for g in self.generators:
            if len(g) != len(self.variables) or min(g) < 0:
                raise RingSpecError(f"bad exponent vector {g}")
            if sum(g) == 0:
                raise RingSpecError("ideal contains 1; the quotient is the zero ring")
        for k, v in enumerate(self.variables):
            if not any(g[k] > 0 and sum(g) == g[k] for g in self.generators):
                raise InfiniteQuotient(f"{self.text}: no pure power of {v} in the ideal")

    def in_ideal(self, exps: Tuple[int, ...]) -> bool:
        return any(all(e >= g for e, g in zip(exps, gen)) for gen in self.generators)

    def standard_monomials(self) -> list[Tuple[int, ...]]:
        """Monomials outside the ideal, by total degree then with earlier variables first."""
        bounds = []
        for k in range(len(self.variables)):
            bounds.append(min(g[k] for g in self.generators if g[k] > 0 and sum(g) == g[k]))
        basis = [e for e in itertools.product(*(range(b) for b in bounds)) if not self.in_ideal(e)]
        basis.sort(key=lambda e: (sum(e), tuple(-x for x in e)))
        return basis

    @property
    def text(self) -> str:
        gens = ",".join(format_term(1, g, self.variables, "*") for g in self.generators)
        return f"Z({self.p})[{','.join(self.variables)}]/({gens})"

    @property
    def order(self) -> int:
        return self.p ** len(self.standard_monomials())


@dataclass(frozen=True)
class Product:
    factors: Tuple["RingSpec", ...]

    def __post_init__(self):
        if len(self.factors) < 2:
            raise RingSpecError("a product needs at least two factors")

    @property
    def text(self) -> str:
        return " x ".join(
            f"({f.text})" if isinstance(f, Product) else f.text for f in self.factors
        )

    @property
    def order(self) -> int:
        return prod(f.order for f in self.factors)


@dataclass(frozen=True)
class Idealization:
    """``R(+)R/I`` where ``I`` is generated by the listed element labels of ``R``."""

    base: "RingSpec"
    generators: Tuple[str, ...]

    @property
    def text(self) -> str:
        return f"ideal({self.base.text}, ({','.join(self.generators)}))"

    @property
    def order(self) -> int:
        from .rings import build_ring

        base = build_ring(self.base)
        return base.order * base.order // len(base.ideal([base.element(g) for g in self.generators]))


@dataclass(frozen=True)
class TableData:
    order: int
    zero: int
    one: int
    add: Tuple[Tuple[int, ...], ...]
    mul: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_json(cls, payload: dict) -> "TableData":
        try:
            n = int(payload["order"])
            add = tuple(tuple(int(v) for v in row) for row in payload["add"])
            mul = tuple(tuple(int(v) for v in row) for row in payload["mul"])
            data = cls(n, int(payload["zero"]), int(payload["one"]), add, mul)
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedTable(f"bad table payload: {exc}") from exc
        for tab in (add, mul):
            if len(tab) != n or any(len(r) != n or min(r) < 0 or max(r) >= n for r in tab):
                raise MalformedTable("tables must be order x order with entries in range")
        if not (0 <= data.zero < n and 0 <= data.one < n) or data.zero == data.one:
            raise MalformedTable("zero and one must be distinct valid ids")
        return data

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "zero": self.zero,
            "one": self.one,
            "add": [list(r) for r in self.add],
            "mul": [list(r) for r in self.mul],
        }


@dataclass(frozen=True)
class Table:
    path: Optional[str] = None
    data: Optional[TableData] = field(default=None, repr=False)

    def load(self) -> TableData:
        if self.data is not None:
            return self.data
        if self.path is None:
            raise MalformedTable("table spec has neither data nor path")
        try:
            payload = json.loads(Path(self.path).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedTable(f"{self.path}: {exc}") from exc
        return TableData.from_json(payload)

    @property
    def text(self) -> str:
        return f"table({self.path if self.path is not None else '<inline>'})"

    @property
    def order(self) -> int:
        return self.load().order


RingSpec = Union[Zn, QuotUni, QuotMono, Product, Idealization, Table]


def gf(q: int) -> QuotUni:
    """``GF(q)`` as a univariate quotient by the bundled irreducible."""
    pk = prime_power(q)
    if pk is None:
        raise RingSpecError(f"GF({q}): {q} is not a prime power")
    p, k = pk
    alias = f"GF({q})"
    if k == 1:
        return QuotUni(p, (0, 1), alias=alias)
    if q not in GF_MODULI:
        raise RingSpecError(f"GF({q}): no bundled irreducible for orders above 256")
    return QuotUni(p, GF_MODULI[q][1], alias=alias)


def truncated_poly(p: int, k: int, var: str = "x") -> QuotMono:
    """``Z_p[var]/(var^k)``."""
    return QuotMono(p, (var,), ((k,),))


def product(*factors: RingSpec) -> Product:
    return Product(tuple(factors))
