"""Sparse polynomials over Z_p as ``{exponent tuple: coefficient}`` dicts.

Only what the quotient rings and the spec parser need: parsing a term list,
formatting, multiplication, and univariate division by a monic modulus.
"""

from __future__ import annotations

import re
from typing import Dict, Sequence, Tuple

Exps = Tuple[int, ...]
Poly = Dict[Exps, int]

_FACTOR = re.compile(r"\s*(?:(\d+)|([a-z])(?:\s*\^\s*(\d+))?|(\*))")


class PolyParseError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(message)


def _split_terms(text: str):
    """Yield (sign, term_text, offset) for a '+'/'-' separated sum."""
    start = 0
    sign = 1
    for i, ch in enumerate(text):
        if ch in "+-":
            chunk = text[start:i]
            if chunk.strip():
                yield sign, chunk, start
            elif i > 0 and text[:i].strip():
                raise PolyParseError("empty term", i)
            sign = 1 if ch == "+" else -1
            start = i + 1
    chunk = text[start:]
    if not chunk.strip():
        raise PolyParseError("empty term", len(text))
    yield sign, chunk, start


def parse_polynomial(text: str, variables: Sequence[str], p: int | None = None) -> Poly:
    """Parse ``"x^3 + 2x*y + 1"`` into a sparse dict.

    Variables are single letters; a coefficient may precede the monomial with or
    without ``*``.  Coefficients are reduced mod ``p`` when given.
    """
    index = {v: k for k, v in enumerate(variables)}
    out: Poly = {}
    for sign, term, base in _split_terms(text):
        coeff = 1
        exps = [0] * len(variables)
        pos = 0
        seen_factor = False
        while pos < len(term):
            if term[pos:].strip() == "":
                break
            m = _FACTOR.match(term, pos)
            if m is None or m.end() == pos:
                raise PolyParseError(f"unexpected {term[pos:].strip()[:1]!r}", base + pos)
            num, var, power, star = m.groups()
            if num is not None:
                coeff *= int(num)
                seen_factor = True
            elif var is not None:
                if var not in index:
                    raise PolyParseError(f"unknown variable {var!r}", base + m.start(2))
                exps[index[var]] += int(power) if power is not None else 1
                seen_factor = True
            pos = m.end()
        if not seen_factor:
            raise PolyParseError("empty term", base)
        key = tuple(exps)
        out[key] = out.get(key, 0) + sign * coeff
    if p is not None:
        out = {k: c % p for k, c in out.items()}
    return {k: c for k, c in out.items() if c}


def format_monomial(exps: Exps, variables: Sequence[str], sep: str = "") -> str:
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return sep.join(parts) if parts else "1"


def format_term(coeff: int, exps: Exps, variables: Sequence[str], sep: str = "") -> str:
    mono = format_monomial(exps, variables, sep)
    if mono == "1":
        return str(coeff)
    return mono if coeff == 1 else f"{coeff}{sep}{mono}"


def univariate_divmod_monic(coeffs: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    """Remainder of ``coeffs`` (ascending) modulo a monic ``modulus`` over Z_p."""
    rem = [c % p for c in coeffs]
    d = len(modulus) - 1
    for top in range(len(rem) - 1, d - 1, -1):
        c = rem[top]
        if c:
            shift = top - d
            for i, m in enumerate(modulus):
                rem[shift + i] = (rem[shift + i] - c * m) % p
    rem = rem[:d] + [0] * max(0, d - len(rem))
    return rem
