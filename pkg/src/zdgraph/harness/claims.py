"""Registry of machine-checkable claims about extended zero-divisor graphs.

Each claim inspects one *instance* (a ring, a product pair ``R1 x R2``, or an
idealization) and returns ``SKIP`` when the hypotheses fail, ``PASS``, an
informational :class:`Note`, or a :class:`Violation` naming the elements
involved.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterator, Optional, Union

from .. import ringspec as rs
from ..errors import UnknownClaim
from ..properties import neighborhoods_coincide_punctured
from ..rings import IdealizationRing, classify_factor
from .analysis import Analyzer, RingAnalysis
from .catalog import Catalog

SKIP = None
PASS = True


@dataclass(frozen=True)
class Violation:
    elements: tuple[str, ...]
    detail: str


@dataclass(frozen=True)
class Note:
    detail: str


Outcome = Union[None, bool, Violation, Note]


@dataclass
class Instance:
    """What a claim looks at; ``r1``/``r2`` are set for product pairs, ``base`` for idealizations."""

    ring: RingAnalysis
    r1: Optional[RingAnalysis] = None
    r2: Optional[RingAnalysis] = None
    base: Optional[RingAnalysis] = None

    @property
    def key(self) -> str:
        return self.ring.text

    def witness_fields(self) -> dict:
        out = {"ring": self.ring.text}
        if self.r1 is not None:
            out["r1"] = self.r1.text
            out["r2"] = self.r2.text
        return out


@dataclass(frozen=True)
class Claim:
    id: str
    summary: str
    scope: str  # ring | zn | pair | idealization
    check: Callable[[Instance], Outcome]
    skip_reason: Optional[str] = None


# -- helpers -------------------------------------------------------------

def _squarefree_odd(m: int) -> bool:
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % (f * f) == 0:
            return False
        f += 2
    return True


def four_times_squarefree_odd(n: int) -> bool:
    """``n = 4 p_1 ... p_r`` with distinct odd primes and ``r >= 1``."""
    return n % 4 == 0 and n // 4 > 1 and _squarefree_odd(n // 4)


def local_shape(a: RingAnalysis) -> list[str]:
    return [classify_factor(f) for f in a.ring.decompose_local()]


def _is_b_times_fields(kinds: list[str]) -> bool:
    return kinds.count("B_type") == 1 and kinds.count("field") == len(kinds) - 1


def _no_orthogonal(a: RingAnalysis) -> tuple[str, ...]:
    w = a.verdict.failure_witness
    return tuple(a.labels(w)) if w is not None else ()


# -- checks --------------------------------------------------------------

def check_e22(inst: Instance) -> Outcome:
    a = inst.ring
    pk = rs.prime_power(a.ring.order)
    if pk is None or pk[1] < 2:
        return SKIP
    expected = pk == (3, 2)
    if a.complemented != expected:
        return Violation(_no_orthogonal(a), f"complemented={a.complemented}, expected {expected}")
    return PASS


def check_l21(inst: Instance) -> Outcome:
    a = inst.ring
    if a.reduced or not a.complemented:
        return SKIP
    profiles = a.ring.power_profiles
    for x in a.nil_star:
        if profiles[x].nil_index != 2:
            return Violation(tuple(a.labels(x)), f"nilpotency index {profiles[x].nil_index}")
    return PASS


def check_l23(inst: Instance) -> Outcome:
    a = inst.ring
    if len(a.zd) < 3 or not a.complemented:
        return SKIP
    for alpha in a.nil_star:
        if a.ring.add(alpha, alpha) != 0:
            return Violation(tuple(a.labels(alpha)), "2*alpha != 0")
        for beta in sorted(a.perp(alpha)):
            if beta in a.nil:
                return Violation(tuple(a.labels(alpha, beta)), "nilpotent orthogonal of a nilpotent")
    return PASS


def check_t25(inst: Instance) -> Outcome:
    a = inst.ring
    if a.z_size < 4 or not a.complemented:
        return SKIP
    if len(a.nil) > 2:
        return Violation(tuple(a.labels(*a.nil_star)), f"|Nil(R)| = {len(a.nil)}")
    return PASS


def check_t27_fwd(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ or not a.complemented:
        return SKIP
    kinds = local_shape(a)
    if not _is_b_times_fields(kinds):
        return Violation((), f"local factors {kinds}")
    return PASS


def check_t27_rev(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ:
        return SKIP
    kinds = local_shape(a)
    if not _is_b_times_fields(kinds):
        return SKIP
    if not a.complemented:
        return Violation(_no_orthogonal(a), f"local factors {kinds} but not complemented")
    return PASS


def check_c28(inst: Instance) -> Outcome:
    a = inst.ring
    if not isinstance(a.spec, rs.Zn) or not a.differ:
        return SKIP
    predicted = four_times_squarefree_odd(a.spec.n)
    if a.complemented != predicted:
        return Violation(_no_orthogonal(a), f"complemented={a.complemented}, arithmetic predicate {predicted}")
    return PASS


def check_c29(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ or len(a.nil) != 2:
        return SKIP
    if not a.complemented:
        return Violation(_no_orthogonal(a), "|Nil| = 2 but not complemented")
    return PASS


def check_l31(inst: Instance) -> Outcome:
    a = inst.ring
    g = a.extended
    non_nil = [v for v in g.vertices if v not in a.nil]
    if not non_nil:
        return SKIP
    for x in non_nil:
        others = sorted(b for b in a.perp(x) if b not in a.nil)
        for b, c in zip(others, others[1:]):
            if g.neighbor_mask(b) != g.neighbor_mask(c):
                punct = neighborhoods_coincide_punctured(g, b, c)
                return Violation(
                    tuple(a.labels(x, b, c)),
                    f"N(b) != N(c); punctured relation {'holds' if punct else 'fails too'}",
                )
    return PASS


def check_t32(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ:
        return SKIP
    if a.complemented != a.uniquely:
        w = a.verdict.uniqueness_witness or ()
        return Violation(tuple(a.labels(*w)), "complemented but not uniquely complemented")
    return PASS


def check_c33(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ or not a.complemented or len(a.nil) != 2:
        return SKIP
    g = a.extended
    (alpha,) = a.nil_star
    for b in sorted(a.perp(alpha)):
        s = a.ring.add(alpha, b)
        if s not in g.index:
            return Violation(tuple(a.labels(alpha, b)), "alpha + b is not a vertex")
        if g.neighbor_mask(b) != g.neighbor_mask(s):
            punct = neighborhoods_coincide_punctured(g, b, s)
            return Violation(
                tuple(a.labels(alpha, b, s)),
                f"N(b) != N(alpha+b); punctured relation {'holds' if punct else 'fails too'}",
            )
    return PASS


def check_l41(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ or not a.classic_verdict.uniquely_complemented:
        return SKIP
    if a.complemented:
        return Violation((), "classical graph uniquely complemented and extended graph complemented")
    return PASS


def check_t42_premise(inst: Instance) -> Outcome:
    ring = inst.ring.ring
    non_zd = set(ring.elements()) - ring.zero_divisor_set
    if non_zd != set(ring.units):
        stray = sorted(non_zd - set(ring.units))
        return Violation(tuple(inst.ring.labels(*stray[:1])), "non-zero-divisor that is not a unit")
    return PASS


def check_t43(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.complemented or len(a.zd) < 3:
        return SKIP
    for x in a.extended.vertices:
        if x in a.nil:
            continue
        if a.perp(x) <= a.nil:
            return Violation(tuple(a.labels(x)), "every orthogonal is nilpotent")
    return PASS


def check_c44(inst: Instance) -> Outcome:
    a = inst.ring
    if not a.differ or not a.complemented:
        return SKIP
    for alpha in a.nil_star:
        for b in sorted(a.perp(alpha)):
            if a.extended.is_end(b):
                return Violation(tuple(a.labels(alpha, b)), "orthogonal of a nilpotent is an end")
    return PASS


def check_p45(inst: Instance) -> Outcome:
    a = inst.ring
    if len(a.nil) != 2:
        return SKIP
    if a.ring.is_local() and a.complemented:
        return Note(f"{a.text}: finite local ring with |Nil| = 2 and complemented graph")
    return PASS


def check_t51(inst: Instance) -> Outcome:
    r1, r2 = inst.r1, inst.r2
    if r2.zd:
        return SKIP
    expected = r1.z_size == 2 or (r1.complemented and len(r1.nil) <= 2)
    return _compare_product(inst, expected)


def check_t52(inst: Instance) -> Outcome:
    r1, r2 = inst.r1, inst.r2
    if r2.z_size != 2:
        return SKIP
    return _compare_product(inst, r1.complemented and r1.reduced)


def check_t53(inst: Instance) -> Outcome:
    r1, r2 = inst.r1, inst.r2
    if r2.reduced or r2.z_size < 3:
        return SKIP
    return _compare_product(inst, r2.complemented and r1.complemented and r1.reduced)


def _compare_product(inst: Instance, expected: bool) -> Outcome:
    a = inst.ring
    if a.complemented != expected:
        return Violation(
            _no_orthogonal(a),
            f"R1 x R2 complemented={a.complemented}, component criterion {expected} "
            f"(R1 complemented={inst.r1.complemented}, reduced={inst.r1.reduced}, "
            f"|Z(R1)|={inst.r1.z_size}, |Nil(R1)|={len(inst.r1.nil)}; "
            f"R2 complemented={inst.r2.complemented}, |Z(R2)|={inst.r2.z_size}, "
            f"|Nil(R2)|={len(inst.r2.nil)})",
        )
    return PASS


def check_p55(inst: Instance) -> Outcome:
    a, base = inst.ring, inst.base
    ring = a.ring
    if not isinstance(ring, IdealizationRing) or ring.module_order != 2 or base.ring.is_field():
        return SKIP
    zm = ring.module_zero_divisors()
    for x in sorted(base.zd & zm):
        if not (base.perp(x) - zm):
            return SKIP
    expected = base.reduced and base.complemented
    if a.complemented != expected:
        return Violation(
            _no_orthogonal(a),
            f"R(+)M complemented={a.complemented}, R reduced={base.reduced}, "
            f"R complemented={base.complemented}",
        )
    return PASS


CLAIMS: dict[str, Claim] = {
    c.id: c
    for c in [
        Claim("E2.2", "Z(p^n), n >= 2: complemented iff (p, n) = (3, 2)", "zn", check_e22),
        Claim("L2.1", "non-reduced and complemented: nonzero nilpotents have index 2", "ring", check_l21),
        Claim("L2.3", "|Z*| >= 3 and complemented: 2a = 0 and no nilpotent orthogonal for a in Nil*", "ring", check_l23),
        Claim("T2.5", "|Z| >= 4 and complemented: |Nil| <= 2", "ring", check_t25),
        Claim("T2.7-fwd", "graphs differ and complemented: R = B x fields, B of order 4 with |Nil| = 2", "ring", check_t27_fwd),
        Claim("T2.7-rev", "graphs differ and R = B x fields: complemented", "ring", check_t27_rev),
        Claim("C2.8", "Z(n) with graphs differing: complemented iff n = 4 * (distinct odd primes)", "zn", check_c28),
        Claim("C2.9", "graphs differ and |Nil| = 2: complemented", "ring", check_c29),
        Claim("L3.1", "a, b, c outside Nil with a orthogonal to b and c: N(b) = N(c)", "ring", check_l31),
        Claim("T3.2", "graphs differ: complemented iff uniquely complemented", "ring", check_t32),
        Claim("C3.3", "graphs differ, complemented, Nil = {0, a}: N(b) = N(a + b) for b orthogonal to a", "ring", check_c33),
        Claim("L4.1", "graphs differ and classical graph uniquely complemented: extended graph not complemented", "ring", check_l41),
        Claim(
            "T4.2", "complemented implies T(R) zero-dimensional", "ring", check_t42_premise,
            skip_reason="trivial for finite rings: T(R) = R and dim 0; only the premise "
            "'every non-zero-divisor is a unit' is checked",
        ),
        Claim("T4.3", "complemented and |Z*| >= 3: every non-nilpotent vertex has a non-nilpotent orthogonal", "ring", check_t43),
        Claim("C4.4", "graphs differ and complemented: orthogonals of nilpotents are not ends", "ring", check_c44),
        Claim("P4.5", "|Nil| = 2: not local or not complemented (finite adaptation, violations informational)", "ring", check_p45),
        Claim("T5.1", "R2 a domain: R1 x R2 complemented iff |Z(R1)| = 2 or (R1 complemented and |Nil(R1)| <= 2)", "pair", check_t51),
        Claim("T5.2", "|Z(R2)| = 2: R1 x R2 complemented iff R1 complemented and reduced", "pair", check_t52),
        Claim("T5.3", "R2 non-reduced, |Z(R2)| >= 3: R1 x R2 complemented iff both complemented and R1 reduced", "pair", check_t53),
        Claim("P5.5", "R not a domain, hypothesis on Z(R) and Z(M): R(+)M complemented iff R reduced and complemented", "idealization", check_p55),
    ]
}


def get_claim(claim_id: str) -> Claim:
    try:
        return CLAIMS[claim_id]
    except KeyError:
        raise UnknownClaim(f"unknown claim {claim_id!r}; known: {', '.join(CLAIMS)}") from None


# -- instances -----------------------------------------------------------

def product_splits(spec: rs.Product) -> Iterator[tuple[rs.RingSpec, rs.RingSpec]]:
    """Every ordered split of the factor list into a nonempty ``R1`` and ``R2``."""
    factors = spec.factors
    k = len(factors)

    def join(idx):
        parts = tuple(factors[i] for i in idx)
        return parts[0] if len(parts) == 1 else rs.Product(parts)

    for r in range(1, k):
        for right in itertools.combinations(range(k), r):
            left = tuple(i for i in range(k) if i not in right)
            yield join(left), join(right)


def pair_instance(analyzer: Analyzer, r1: rs.RingSpec, r2: rs.RingSpec) -> Instance:
    return _LazyPair(analyzer, r1, r2)


class _LazyPair(Instance):
    """Product ring analysis is built only if a claim gets past the R2 filter."""

    def __init__(self, analyzer: Analyzer, r1: rs.RingSpec, r2: rs.RingSpec):
        self._spec = rs.Product((r1, r2))
        self.r1 = analyzer.get(r1)
        self.r2 = analyzer.get(r2)
        self.base = None

    @cached_property
    def ring(self) -> RingAnalysis:
        return RingAnalysis(self._spec)

    @property
    def key(self) -> str:
        return self._spec.text

    def witness_fields(self) -> dict:
        return {"ring": self._spec.text, "r1": self.r1.text, "r2": self.r2.text}


def idealization_instance(analyzer: Analyzer, spec: rs.Idealization) -> Instance:
    return Instance(ring=RingAnalysis(spec), base=analyzer.get(spec.base))


def instances(scope: str, catalog: Catalog, analyzer: Analyzer) -> Iterator[Instance]:
    if scope == "ring":
        for spec in catalog:
            yield Instance(analyzer.get(spec))
    elif scope == "zn":
        for spec in catalog:
            if isinstance(spec, rs.Zn):
                yield Instance(analyzer.get(spec))
    elif scope == "pair":
        seen = set()
        for spec in catalog:
            if isinstance(spec, rs.Product):
                for r1, r2 in product_splits(spec):
                    key = (r1.text, r2.text)
                    if key not in seen:
                        seen.add(key)
                        yield pair_instance(analyzer, r1, r2)
    elif scope == "idealization":
        for spec in catalog:
            if isinstance(spec, rs.Idealization):
                yield idealization_instance(analyzer, spec)
    else:
        raise ValueError(f"unknown scope {scope!r}")


def instance_from_witness(claim: Claim, witness: dict, analyzer: Analyzer | None = None) -> Instance:
    from ..parse import parse_ring_spec

    analyzer = analyzer or Analyzer()
    if claim.scope == "pair":
        return pair_instance(analyzer, parse_ring_spec(witness["r1"]), parse_ring_spec(witness["r2"]))
    spec = parse_ring_spec(witness["ring"])
    if claim.scope == "idealization":
        return idealization_instance(analyzer, spec)
    return Instance(analyzer.get(spec))
