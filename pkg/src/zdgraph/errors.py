"""Exception hierarchy shared by every zdgraph module."""

from __future__ import annotations


class ZdgError(Exception):
    """Base class for all zdgraph errors."""


class RingSpecError(ZdgError, ValueError):
    """A ring description is invalid before any arithmetic is attempted."""


class InfiniteQuotient(RingSpecError):
    """A monomial ideal misses a pure power of some variable."""


class NonMonic(RingSpecError):
    """A univariate modulus is not monic of positive degree."""


class NotPrime(RingSpecError):
    pass


class SpecSyntaxError(RingSpecError):
    """Raised by the ring-spec parser; ``offset`` is a byte offset into the input."""

    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class OrderBoundExceeded(ZdgError):
    def __init__(self, spec_text: str, order: int, bound: int):
        self.spec_text = spec_text
        self.order = order
        self.bound = bound
        super().__init__(f"{spec_text}: order {order} exceeds bound {bound}")


class MalformedTable(ZdgError, ValueError):
    """Explicit tables violate a ring axiom."""


class NotLocal(ZdgError, ValueError):
    pass


class UnknownElement(ZdgError, KeyError):
    pass


class UnknownVertex(ZdgError, KeyError):
    pass


class UnknownClaim(ZdgError, KeyError):
    pass
