"""Finite commutative rings with dense integer element ids.

Every ring numbers its elements ``0 .. order-1`` with ``0`` the additive zero and
``1`` the identity.  Scalar ``add``/``mul``/``neg`` use the construction's own
arithmetic (residues, coefficient vectors, component tuples); the Cayley tables
behind the bulk queries are built lazily, vectorized, and cached.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Literal, Optional, Sequence, Tuple

import numpy as np

from . import ringspec as rs
from .errors import MalformedTable, NotLocal, OrderBoundExceeded, UnknownElement
from .poly import PolyParseError, format_term, parse_polynomial, univariate_divmod_monic

DEFAULT_MAX_ORDER = 4096
ElementKind = Literal["zero", "unit", "zero_divisor"]
FactorKind = Literal["field", "B_type", "other_local"]

_CHUNK_CELLS = 1 << 22


def default_max_order() -> int:
    """Order bound for :func:`build_ring`; ``ZDG_MAX_ORDER`` overrides it."""
    env = os.environ.get("ZDG_MAX_ORDER")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_ORDER


@dataclass(frozen=True)
class PowerProfile:
    element: int
    nonzero_powers: Tuple[int, ...]
    nil_index: Optional[int]


class FiniteRing:
    """Base class; subclasses supply scalar arithmetic, labels and table builders."""

    def __init__(self, order: int, descriptor: str, spec: Optional[rs.RingSpec] = None):
        if order < 2:
            raise MalformedTable("a ring with identity 1 != 0 has at least two elements")
        self.order = order
        self.descriptor = descriptor
        self.spec = spec

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.descriptor} order={self.order}>"

    # -- arithmetic ------------------------------------------------------
    zero = 0
    one = 1

    def add(self, i: int, j: int) -> int:
        return int(self.add_table[i, j])

    def mul(self, i: int, j: int) -> int:
        return int(self.mul_table[i, j])

    def neg(self, i: int) -> int:
        return int(self.neg_table[i])

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    def pow(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("exponent must be positive")
        result, base = None, x
        while k:
            if k & 1:
                result = base if result is None else self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def elements(self) -> range:
        return range(self.order)

    def label(self, i: int) -> str:
        return str(i)

    def element(self, text: str) -> int:
        """Inverse of :meth:`label` (whitespace-insensitive)."""
        key = "".join(text.split())
        lookup = self._label_index
        if key not in lookup:
            raise UnknownElement(f"{text!r} is not an element of {self.descriptor}")
        return lookup[key]

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {self.label(i): i for i in self.elements()}

    # -- tables ----------------------------------------------------------
    def _build_tables(self) -> Tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    @cached_property
    def _tables(self) -> Tuple[np.ndarray, np.ndarray]:
        add, mul = self._build_tables()
        return add.astype(np.int32, copy=False), mul.astype(np.int32, copy=False)

    @property
    def add_table(self) -> np.ndarray:
        return self._tables[0]

    @property
    def mul_table(self) -> np.ndarray:
        return self._tables[1]

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.argmax(self.add_table == 0, axis=1)

    @cached_property
    def mul_rows(self) -> list[list[int]]:
        return self.mul_table.tolist()

    # -- element classification -----------------------------------------
    @cached_property
    def _zd_mask(self) -> np.ndarray:
        zero = self.mul_table == 0
        mask = zero[:, 1:].any(axis=1)
        mask[0] = False
        return mask

    @cached_property
    def zero_divisors(self) -> frozenset[int]:
        """Nonzero zero-divisors, i.e. ``Z(R)*``."""
        return frozenset(int(i) for i in np.flatnonzero(self._zd_mask))

    @cached_property
    def zero_divisor_set(self) -> frozenset[int]:
        """``Z(R)``, which contains 0."""
        return self.zero_divisors | {0}

    @cached_property
    def units(self) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero((self.mul_table == 1).any(axis=1)))

    def classify(self, x: int) -> ElementKind:
        if x == 0:
            return "zero"
        if self._zd_mask[x]:
            return "zero_divisor"
        return "unit"

    def annihilator(self, x: int) -> frozenset[int]:
        return frozenset(int(i) for i in np.flatnonzero(self.mul_table[x] == 0))

    def power_profile(self, x: int) -> PowerProfile:
        rows = self.mul_rows
        powers = [x] if x != 0 else []
        seen = set(powers)
        nil = 1 if x == 0 else None
        cur = x
        while cur != 0:
            cur = rows[cur][x]
            if cur == 0:
                nil = len(powers) + 1
            elif cur in seen:
                break
            else:
                powers.append(cur)
                seen.add(cur)
        return PowerProfile(x, tuple(powers), nil)

    @cached_property
    def power_profiles(self) -> Tuple[PowerProfile, ...]:
        return tuple(self.power_profile(x) for x in self.elements())

    @cached_property
    def nilradical(self) -> frozenset[int]:
        return frozenset(p.element for p in self.power_profiles if p.nil_index is not None)

    def is_reduced(self) -> bool:
        return len(self.nilradical) == 1

    def is_local(self) -> bool:
        # finite commutative ring: local iff every zero-divisor is nilpotent
        return self.zero_divisor_set == self.nilradical

    def is_field(self) -> bool:
        return not self.zero_divisors

    # -- ideals and idempotents -------------------------------------------
    def ideal(self, generators: Iterable[int]) -> frozenset[int]:
        """Smallest ideal containing ``generators``: the sum of the principal ideals."""
        rows = self.mul_rows
        add = self.add_table
        members = np.array([0])
        for g in generators:
            principal = np.array(sorted({rows[g][r] for r in self.elements()}))
            members = np.unique(add[np.ix_(members, principal)])
        return frozenset(int(m) for m in members)

    def ideal_generators(self, ideal: Iterable[int]) -> Tuple[int, ...]:
        """A short generating set for ``ideal``, chosen greedily by element id."""
        target = frozenset(ideal)
        gens: list[int] = []
        current = frozenset({0})
        for x in sorted(target):
            if x not in current:
                gens.append(x)
                current = self.ideal(gens)
            if current == target:
                break
        return tuple(gens)

    @cached_property
    def idempotents(self) -> Tuple[int, ...]:
        mt = self.mul_table
        return tuple(int(e) for e in np.flatnonzero(mt[np.arange(self.order), np.arange(self.order)] == np.arange(self.order)))

    def primitive_idempotents(self) -> Tuple[int, ...]:
        rows = self.mul_rows
        nonzero = [e for e in self.idempotents if e != 0]
        return tuple(
            e for e in nonzero if not any(f != e and rows[e][f] == f for f in nonzero)
        )

    def maximal_ideals(self) -> list[frozenset[int]]:
        """One maximal ideal per local factor: ``{r : e r nilpotent}``."""
        rows = self.mul_rows
        nil = self.nilradical
        return [
            frozenset(r for r in self.elements() if rows[e][r] in nil)
            for e in self.primitive_idempotents()
        ]

    def decompose_local(self) -> list["FiniteRing"]:
        """Local factors ``eR`` for the primitive idempotents ``e`` (in id order)."""
        prims = self.primitive_idempotents()
        if len(prims) <= 1:
            return [self]
        return [self.principal_subring(e) for e in prims]

    def principal_subring(self, e: int) -> "TableRing":
        """``eR`` as a ring with identity ``e``."""
        rows = self.mul_rows
        members = sorted({rows[e][r] for r in self.elements()})
        pos = {m: k for k, m in enumerate(members)}
        idx = np.array(members)
        relabel = np.full(self.order, -1, dtype=np.int64)
        relabel[idx] = np.arange(len(members))
        add = relabel[self.add_table[np.ix_(idx, idx)]]
        mul = relabel[self.mul_table[np.ix_(idx, idx)]]
        labels = [self.label(m) for m in members]
        return TableRing.from_arrays(
            add, mul, zero=pos[0], one=pos[e], labels=labels,
            descriptor=f"{self.label(e)}*[{self.descriptor}]", validate=False,
        )


def check_ring_axioms(ring: FiniteRing) -> list[str]:
    """Exhaustively list violated axioms (commutativity, associativity, ...)."""
    A, M = ring.add_table, ring.mul_table
    n = ring.order
    ar = np.arange(n)
    problems = []
    if not (A == A.T).all():
        problems.append("addition not commutative")
    if not (M == M.T).all():
        problems.append("multiplication not commutative")
    if not (A[0] == ar).all():
        problems.append("0 is not additively neutral")
    if not (M[1] == ar).all():
        problems.append("1 is not multiplicatively neutral")
    if not (M[0] == 0).all():
        problems.append("0 is not absorbing")
    if not (A == 0).any(axis=1).all():
        problems.append("missing additive inverses")
    step = max(1, _CHUNK_CELLS // (n * n))
    for start in range(0, n, step):
        a = ar[start:start + step, None, None]
        for name, T in (("addition", A), ("multiplication", M)):
            if not (T[T[a, ar[None, :, None]], ar[None, None, :]] == T[a, T[None, :, :]]).all():
                problems.append(f"{name} not associative")
        if not (M[a, A[None, :, :]] == A[M[a, ar[None, :, None]], M[a, ar[None, None, :]]]).all():
            problems.append("multiplication does not distribute over addition")
    return sorted(set(problems))


class ZnRing(FiniteRing):
    def __init__(self, n: int, spec=None):
        super().__init__(n, f"Z({n})", spec)
        self.n = n

    def add(self, i, j):
        return (i + j) % self.n

    def mul(self, i, j):
        return (i * j) % self.n

    def neg(self, i):
        return (-i) % self.n

    def element(self, text):
        try:
            return int("".join(text.split())) % self.n
        except ValueError:
            raise UnknownElement(f"{text!r} is not an element of {self.descriptor}") from None

    def _build_tables(self):
        r = np.arange(self.n, dtype=np.int64)
        return np.add.outer(r, r) % self.n, np.multiply.outer(r, r) % self.n


class PolyQuotientRing(FiniteRing):
    """Coefficient vectors over Z_p on a monomial basis; id = base-p digits.

    ``structure[i, j]`` is the coefficient vector of ``basis[i] * basis[j]``;
    ``basis[0]`` is the monomial 1, so ids 0 and 1 are zero and one.
    """

    def __init__(self, p, variables, basis, structure, reducer, descriptor, spec=None):
        k = len(basis)
        super().__init__(p ** k, descriptor, spec)
        self.p = p
        self.variables = tuple(variables)
        self.basis = tuple(basis)
        self.structure = np.asarray(structure, dtype=np.int64) % p
        self._reducer = reducer
        self._weights = p ** np.arange(k, dtype=np.int64)

    def coefficients(self, i: int) -> list[int]:
        out = []
        for _ in self.basis:
            i, d = divmod(i, self.p)
            out.append(d)
        return out

    def from_coefficients(self, coeffs: Sequence[int]) -> int:
        return int(sum((c % self.p) * int(w) for c, w in zip(coeffs, self._weights)))

    def add(self, i, j):
        return self.from_coefficients(
            [a + b for a, b in zip(self.coefficients(i), self.coefficients(j))]
        )

    def neg(self, i):
        return self.from_coefficients([-a for a in self.coefficients(i)])

    def mul(self, i, j):
        a = np.array(self.coefficients(i), dtype=np.int64)
        b = np.array(self.coefficients(j), dtype=np.int64)
        return self.from_coefficients(np.einsum("i,j,ijk->k", a, b, self.structure) % self.p)

    @cached_property
    def digits(self) -> np.ndarray:
        ids = np.arange(self.order, dtype=np.int64)
        return (ids[:, None] // self._weights[None, :]) % self.p

    def _build_tables(self):
        D, p, w, S = self.digits, self.p, self._weights, self.structure
        n, k = D.shape
        add = ((D[:, None, :] + D[None, :, :]) % p) @ w
        left = np.einsum("ai,ijc->ajc", D, S)  # (n, k, k): row element times basis_j
        mul = np.empty((n, n), dtype=np.int64)
        step = max(1, _CHUNK_CELLS // (n * k))
        for s in range(0, n, step):
            blk = np.einsum("bj,ajc->abc", D, left[s:s + step]) % p
            mul[s:s + step] = blk @ w
        return add, mul

    def label(self, i):
        terms = [
            format_term(c, e, self.variables)
            for c, e in zip(self.coefficients(i), self.basis)
            if c
        ]
        return "+".join(terms) if terms else "0"

    def element(self, text):
        try:
            poly = parse_polynomial(text, self.variables, self.p)
        except PolyParseError as exc:
            raise UnknownElement(f"{text!r}: {exc}") from None
        return self.from_coefficients(self._reducer(poly))


def _mono_ring(spec: rs.QuotMono) -> PolyQuotientRing:
    basis = spec.standard_monomials()
    pos = {e: i for i, e in enumerate(basis)}
    k = len(basis)
    S = np.zeros((k, k, k), dtype=np.int64)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            c = tuple(x + y for x, y in zip(a, b))
            if c in pos:
                S[i, j, pos[c]] = 1

    def reduce(poly):
        out = [0] * k
        for e, c in poly.items():
            if e in pos:
                out[pos[e]] += c
        return out

    return PolyQuotientRing(spec.p, spec.variables, basis, S, reduce, spec.text, spec)


def _uni_ring(spec: rs.QuotUni) -> PolyQuotientRing:
    d = spec.degree
    basis = [(e,) for e in range(d)]
    S = np.zeros((d, d, d), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            mono = [0] * (i + j) + [1]
            S[i, j] = univariate_divmod_monic(mono, spec.modulus, spec.p)

    def reduce(poly):
        deg = max((e[0] for e in poly), default=0)
        coeffs = [0] * (deg + 1)
        for e, c in poly.items():
            coeffs[e[0]] += c
        return univariate_divmod_monic(coeffs, spec.modulus, spec.p)

    return PolyQuotientRing(spec.p, (spec.var,), basis, S, reduce, spec.text, spec)


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def _unwrap_tuple(text: str, arity: int) -> list[str]:
    key = "".join(text.split())
    if not (key.startswith("(") and key.endswith(")")):
        raise UnknownElement(f"{text!r} is not a tuple")
    parts = _split_top_level(key[1:-1])
    if len(parts) != arity:
        raise UnknownElement(f"{text!r} has {len(parts)} components, expected {arity}")
    return parts


class ProductRing(FiniteRing):
    """Direct product; codes are mixed-radix (first factor least significant).

    The code of the identity ``(1, ..., 1)`` is swapped with code 1 so that the
    id convention holds.
    """

    def __init__(self, factors: Sequence[FiniteRing], spec=None):
        self.factors = tuple(factors)
        self._radix = tuple(f.order for f in self.factors)
        strides = [1]
        for r in self._radix[:-1]:
            strides.append(strides[-1] * r)
        self._strides = tuple(strides)
        order = strides[-1] * self._radix[-1]
        descriptor = " x ".join(
            f"({f.descriptor})" if isinstance(f, ProductRing) else f.descriptor for f in self.factors
        )
        super().__init__(order, descriptor, spec)
        self._one_code = sum(self._strides)

    def _to_code(self, i: int) -> int:
        return self._one_code if i == 1 else 1 if i == self._one_code else i

    _from_code = _to_code

    def components(self, i: int) -> Tuple[int, ...]:
        c = self._to_code(i)
        return tuple((c // s) % r for s, r in zip(self._strides, self._radix))

    def from_components(self, comps: Sequence[int]) -> int:
        return self._from_code(sum(c * s for c, s in zip(comps, self._strides)))

    def add(self, i, j):
        return self.from_components(
            [f.add(a, b) for f, a, b in zip(self.factors, self.components(i), self.components(j))]
        )

    def mul(self, i, j):
        return self.from_components(
            [f.mul(a, b) for f, a, b in zip(self.factors, self.components(i), self.components(j))]
        )

    def neg(self, i):
        return self.from_components([f.neg(a) for f, a in zip(self.factors, self.components(i))])

    def _build_tables(self):
        n = self.order
        perm = np.arange(n)
        perm[1], perm[self._one_code] = self._one_code, 1  # id <-> code, an involution
        codes = perm
        add = np.zeros((n, n), dtype=np.int64)
        mul = np.zeros((n, n), dtype=np.int64)
        for f, s, r in zip(self.factors, self._strides, self._radix):
            comp = (codes // s) % r
            add += s * f.add_table[np.ix_(comp, comp)]
            mul += s * f.mul_table[np.ix_(comp, comp)]
        return perm[add], perm[mul]

    def label(self, i):
        return "(" + ",".join(f.label(c) for f, c in zip(self.factors, self.components(i))) + ")"

    def element(self, text):
        parts = _unwrap_tuple(text, len(self.factors))
        return self.from_components([f.element(t) for f, t in zip(self.factors, parts)])


class IdealizationRing(FiniteRing):
    """``R(+)M`` with ``M = R/I``; id = a + |R| * (coset index), coset 0 = I.

    Product rule ``(a, m)(b, n) = (ab, a n + b m)``.
    """

    def __init__(self, base: FiniteRing, ideal: Iterable[int], descriptor: str, spec=None):
        self.base = base
        self.ideal_set = frozenset(ideal)
        coset_of = np.full(base.order, -1, dtype=np.int64)
        reps = []
        members = np.array(sorted(self.ideal_set))
        for r in base.elements():
            if coset_of[r] < 0:
                coset_of[base.add_table[r, members]] = len(reps)
                reps.append(r)
        self.coset_of = coset_of
        self.coset_reps = tuple(reps)
        self.module_order = len(reps)
        if self.module_order < 2:
            raise MalformedTable("idealization needs a proper ideal (module M = R/I is zero)")
        super().__init__(base.order * self.module_order, descriptor, spec)
        rep = np.array(reps)
        self.action = coset_of[base.mul_table[:, rep]]  # action[r, c] = coset of r * rep_c
        self.module_add = coset_of[base.add_table[np.ix_(rep, rep)]]

    def split(self, i: int) -> Tuple[int, int]:
        c, a = divmod(i, self.base.order)
        return a, c

    def join(self, a: int, c: int) -> int:
        return a + self.base.order * c

    def add(self, i, j):
        (a, m), (b, k) = self.split(i), self.split(j)
        return self.join(self.base.add(a, b), int(self.module_add[m, k]))

    def mul(self, i, j):
        (a, m), (b, k) = self.split(i), self.split(j)
        return self.join(self.base.mul(a, b), int(self.module_add[self.action[a, k], self.action[b, m]]))

    def neg(self, i):
        a, m = self.split(i)
        return self.join(self.base.neg(a), int(self.coset_of[self.base.neg(self.coset_reps[m])]))

    def _build_tables(self):
        n = self.base.order
        ids = np.arange(self.order)
        a, c = ids % n, ids // n
        A, M = self.base.add_table, self.base.mul_table
        add = A[np.ix_(a, a)] + n * self.module_add[np.ix_(c, c)]
        left = self.action[np.ix_(a, c)]  # left[i, j] = a_i * m_j
        mul = M[np.ix_(a, a)] + n * self.module_add[left, left.T]
        return add, mul

    def module_zero_divisors(self) -> frozenset[int]:
        """``Z(M)``: elements of R killing some nonzero element of M."""
        return frozenset(int(r) for r in np.flatnonzero((self.action[:, 1:] == 0).any(axis=1)))

    def label(self, i):
        a, m = self.split(i)
        return f"({self.base.label(a)},{self.base.label(self.coset_reps[m])})"

    def element(self, text):
        first, second = _unwrap_tuple(text, 2)
        return self.join(self.base.element(first), int(self.coset_of[self.base.element(second)]))


class TableRing(FiniteRing):
    """A ring given by explicit tables; ids are relabeled so zero -> 0 and one -> 1."""

    def __init__(self, data: rs.TableData, descriptor: str = "table", spec=None,
                 labels: Optional[Sequence[str]] = None, validate: bool = True):
        self._init(np.array(data.add), np.array(data.mul), data.zero, data.one,
                   labels, descriptor, spec, validate)

    @classmethod
    def from_arrays(cls, add, mul, *, zero, one, labels=None, descriptor="table",
                    spec=None, validate=True) -> "TableRing":
        ring = cls.__new__(cls)
        ring._init(np.asarray(add), np.asarray(mul), zero, one, labels, descriptor, spec, validate)
        return ring

    def _init(self, add, mul, zero, one, labels, descriptor, spec, validate):
        n = add.shape[0]
        if zero == one:
            raise MalformedTable("zero and one must differ")
        old = [zero, one] + [i for i in range(n) if i not in (zero, one)]
        new_of_old = np.empty(n, dtype=np.int64)
        new_of_old[old] = np.arange(n)
        idx = np.array(old)
        self._add = new_of_old[add[np.ix_(idx, idx)]]
        self._mul = new_of_old[mul[np.ix_(idx, idx)]]
        base_labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self._labels = tuple(base_labels[o] for o in old)
        super().__init__(n, descriptor, spec)
        if validate and n <= 256:
            problems = check_ring_axioms(self)
            if problems:
                raise MalformedTable(f"{descriptor}: " + "; ".join(problems))

    def _build_tables(self):
        return self._add, self._mul

    def label(self, i):
        return self._labels[i]


def classify_factor(ring: FiniteRing) -> FactorKind:
    if not ring.is_local():
        raise NotLocal(f"{ring.descriptor} is not local")
    if ring.is_field():
        return "field"
    if ring.order == 4 and len(ring.nilradical) == 2:
        return "B_type"
    return "other_local"


def build_ring(spec: rs.RingSpec, max_order: Optional[int] = None) -> FiniteRing:
    """Construct the ring described by ``spec``.

    Raises :class:`OrderBoundExceeded` if the order exceeds ``max_order``
    (default :func:`default_max_order`).
    """
    bound = default_max_order() if max_order is None else max_order
    if isinstance(spec, rs.Product):
        order = 1
        for f in spec.factors:
            order *= _checked_order(f, bound)
    else:
        order = _checked_order(spec, bound)
    if order > bound:
        raise OrderBoundExceeded(spec.text, order, bound)
    return _build_cached(spec)


def _checked_order(spec, bound):
    if isinstance(spec, rs.Idealization):
        base_order = _checked_order(spec.base, bound)
        if base_order > bound:
            raise OrderBoundExceeded(spec.base.text, base_order, bound)
    return spec.order


@lru_cache(maxsize=64)
def _build_cached(spec: rs.RingSpec) -> FiniteRing:
    if isinstance(spec, rs.Zn):
        return ZnRing(spec.n, spec)
    if isinstance(spec, rs.QuotUni):
        return _uni_ring(spec)
    if isinstance(spec, rs.QuotMono):
        return _mono_ring(spec)
    if isinstance(spec, rs.Product):
        return ProductRing([_build_cached(f) for f in spec.factors], spec)
    if isinstance(spec, rs.Idealization):
        base = _build_cached(spec.base)
        gens = [base.element(g) for g in spec.generators]
        return IdealizationRing(base, base.ideal(gens), spec.text, spec)
    if isinstance(spec, rs.Table):
        return TableRing(spec.load(), spec.text, spec)
    raise TypeError(f"not a ring spec: {spec!r}")
