"""Parser for the ring-spec text grammar.

::

    spec    := term (("x" | "×") term)*
    term    := "Z(" n ")" [ "[" vars "]" "/" "(" poly ("," poly)* ")" ]
             | "GF(" q ")" | "GF(" p "^" k ")"
             | "ideal(" spec "," "(" element ("," element)* ")" ")"
             | "table(" path ")"
             | "(" spec ")"

Keywords are case-insensitive and whitespace is ignored.  Errors carry the byte
offset of the offending character.
"""

from __future__ import annotations

from . import ringspec as rs
from .errors import NonMonic, RingSpecError, SpecSyntaxError
from .poly import PolyParseError, parse_polynomial

_PRODUCT_OPS = ("x", "X", "×")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None) -> SpecSyntaxError:
        at = self.pos if pos is None else pos
        return SpecSyntaxError(message, len(self.text[:at].encode("utf-8")), self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            found = self.peek() or "end of input"
            raise self.error(f"expected {ch!r}, found {found!r}")
        self.pos += 1

    def keyword(self, word: str) -> bool:
        self.skip()
        end = self.pos + len(word)
        if self.text[self.pos:end].lower() == word.lower():
            self.pos = end
            return True
        return False

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected an integer")
        return int(self.text[start:self.pos])

    def balanced(self) -> tuple[str, int]:
        """Raw text up to the ``)`` matching an already consumed ``(``."""
        start = self.pos
        depth = 1
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    raw = self.text[start:self.pos]
                    self.pos += 1
                    return raw, start
            self.pos += 1
        raise self.error("unbalanced parenthesis", start - 1)

    # -- grammar ---------------------------------------------------------
    def parse(self) -> rs.RingSpec:
        spec = self.product()
        if self.peek():
            raise self.error(f"unexpected {self.peek()!r}")
        return spec

    def product(self) -> rs.RingSpec:
        factors = [self.term()]
        while self.peek() in _PRODUCT_OPS and self.peek():
            self.pos += 1
            factors.append(self.term())
        return factors[0] if len(factors) == 1 else rs.Product(tuple(factors))

    def term(self) -> rs.RingSpec:
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.product()
            self.expect(")")
            return inner
        if self.keyword("ideal"):
            return self.idealization()
        if self.keyword("table"):
            self.expect("(")
            raw, at = self.balanced()
            path = raw.strip()
            if not path:
                raise self.error("empty table path", at)
            return rs.Table(path)
        if self.keyword("gf"):
            return self.galois()
        if self.keyword("z"):
            return self.modular()
        raise self.error(f"expected a ring, found {ch or 'end of input'!r}")

    def galois(self) -> rs.RingSpec:
        self.expect("(")
        at = self.pos
        q = self.integer()
        if self.peek() == "^":
            self.pos += 1
            q = q ** self.integer()
        self.expect(")")
        if rs.prime_power(q) is None:
            raise self.error(f"GF({q}): not a prime power", at)
        return rs.gf(q)

    def modular(self) -> rs.RingSpec:
        self.expect("(")
        n = self.integer()
        self.expect(")")
        if self.peek() != "[":
            return rs.Zn(n)
        self.pos += 1
        raw, at = self.balanced_bracket()
        variables = tuple(v.strip().lower() for v in raw.split(","))
        for v in variables:
            if len(v) != 1 or not v.isalpha():
                raise self.error(f"variable {v!r} must be a single letter", at)
        self.expect("/")
        self.expect("(")
        body, body_at = self.balanced()
        if not rs.is_prime(n):
            raise rs.NotPrime(f"Z({n})[...]: coefficient modulus {n} is not prime")
        return self.quotient(n, variables, body, body_at)

    def balanced_bracket(self) -> tuple[str, int]:
        start = self.pos
        end = self.text.find("]", start)
        if end < 0:
            raise self.error("missing ']'", start - 1)
        self.pos = end + 1
        return self.text[start:end], start

    def quotient(self, p: int, variables, body: str, body_at: int) -> rs.RingSpec:
        polys = []
        offset = body_at
        for chunk in body.split(","):
            try:
                poly = parse_polynomial(chunk.lower(), variables, p)
            except PolyParseError as exc:
                raise self.error(str(exc), offset + exc.offset) from None
            if not poly:
                raise self.error("generator is zero mod p", offset)
            polys.append(poly)
            offset += len(chunk) + 1
        if all(len(poly) == 1 for poly in polys):
            return rs.QuotMono(p, variables, tuple(next(iter(poly)) for poly in polys))
        if len(variables) == 1 and len(polys) == 1:
            poly = polys[0]
            deg = max(e[0] for e in poly)
            if poly[(deg,)] != 1:
                raise NonMonic(f"leading coefficient of {body.strip()} is not 1 mod {p}")
            return rs.QuotUni(p, tuple(poly.get((e,), 0) for e in range(deg + 1)), variables[0])
        raise RingSpecError(
            f"non-monomial generator in ({body.strip()}): only monomial ideals or a single "
            "univariate monic modulus are supported"
        )

    def idealization(self) -> rs.RingSpec:
        self.expect("(")
        base = self.product()
        self.expect(",")
        self.expect("(")
        raw, _ = self.balanced()
        self.expect(")")
        gens = tuple("".join(g.split()).lower() for g in _split_top(raw))
        if gens == ("",):
            gens = ()
        if any(not g for g in gens):
            raise self.error("empty ideal generator")
        return rs.Idealization(base, gens)


def _split_top(text: str) -> list[str]:
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


def parse_ring_spec(text: str) -> rs.RingSpec:
    """Parse ``text`` into a :data:`~zdgraph.ringspec.RingSpec`."""
    return _Parser(text).parse()
