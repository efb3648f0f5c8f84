from __future__ import annotations

from typing import Sequence

from ..words import RepresentativePair, concat
from .base import Group, InvalidElement, PresentationError


def _offsets(factors: Sequence[Group]) -> list[int]:
    out, acc = [], 0
    for F in factors:
        out.append(acc)
        acc += F.n
    return out


class FreeProduct(Group):
    """Free product of the factor groups.

    An element is its reduced word: a tuple of letters ``(f, z)`` with ``f``
    the 0-based factor index and ``z`` a non-identity element of that factor,
    adjacent letters from different factors.  The generating tuple is the
    concatenation of the factors' tuples.
    """

    kind = "free_product"

    def __init__(self, factors: Sequence[Group]):
        if not factors:
            raise PresentationError("free product needs at least one factor")
        self.factors = tuple(factors)
        self.identity = ()
        self.offsets = _offsets(self.factors)
        gens = []
        for f, F in enumerate(self.factors):
            for g in F.generators:
                gens.append(self.letter(f, g))
        self.generators = tuple(gens)

    def letter(self, f: int, z) -> tuple:
        """Embed an element of factor f."""
        if z == self.factors[f].identity:
            return ()
        return ((f, z),)

    def mul(self, a, b):
        if not a:
            return b
        if not b:
            return a
        x = list(a)
        i = 0
        while i < len(b) and x:
            f, z = x[-1]
            g, w = b[i]
            if f != g:
                break
            F = self.factors[f]
            p = F.mul(z, w)
            x.pop()
            i += 1
            if p != F.identity:
                x.append((f, p))
                break
        return tuple(x) + tuple(b[i:])

    def inv(self, a):
        return tuple((f, self.factors[f].inv(z)) for f, z in reversed(a))

    def validate(self, a) -> None:
        if not isinstance(a, tuple):
            raise InvalidElement(f"{a!r} is not a reduced word")
        prev = None
        for item in a:
            if not isinstance(item, tuple) or len(item) != 2:
                raise InvalidElement(f"{a!r}: letters must be (factor, element) pairs")
            f, z = item
            if not isinstance(f, int) or not 0 <= f < len(self.factors):
                raise InvalidElement(f"{a!r}: factor index {f} out of range")
            F = self.factors[f]
            F.validate(z)
            if z == F.identity:
                raise InvalidElement(f"{a!r}: identity letter")
            if f == prev:
                raise InvalidElement(f"{a!r}: adjacent letters from the same factor")
            prev = f
        return None

    def word_of(self, a) -> RepresentativePair:
        return concat(*(self.factors[f].word_of(z).shifted(self.offsets[f]) for f, z in a))

    def parse_element(self, value):
        a = tuple((int(f) - 1, self.factors[int(f) - 1].parse_element(z)) for f, z in value)
        self.validate(a)
        return a

    def format_element(self, a) -> str:
        if not a:
            return "e"
        return "*".join(f"[{f + 1}:{self.factors[f].format_element(z)}]" for f, z in a)

    def to_document(self) -> dict:
        return {"kind": "free_product", "factors": [F.to_document() for F in self.factors]}

    def __repr__(self) -> str:
        return "<FreeProduct " + " * ".join(repr(F) for F in self.factors) + ">"


class DirectProduct(Group):
    """Direct product; elements are tuples of factor elements."""

    kind = "direct_product"

    def __init__(self, factors: Sequence[Group]):
        if not factors:
            raise PresentationError("direct product needs at least one factor")
        self.factors = tuple(factors)
        self.identity = tuple(F.identity for F in self.factors)
        self.offsets = _offsets(self.factors)
        gens = []
        for f, F in enumerate(self.factors):
            for g in F.generators:
                gens.append(self.embed(f, g))
        self.generators = tuple(gens)

    @property
    def is_finite(self) -> bool:
        return all(F.is_finite for F in self.factors)

    @property
    def order(self) -> int:
        out = 1
        for F in self.factors:
            out *= F.order
        return out

    def elements(self) -> list:
        import itertools
        return [tuple(c) for c in itertools.product(*(F.elements() for F in self.factors))]

    def embed(self, f: int, z) -> tuple:
        c = list(self.identity)
        c[f] = z
        return tuple(c)

    def mul(self, a, b):
        return tuple(F.mul(x, y) for F, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(F.inv(x) for F, x in zip(self.factors, a))

    def validate(self, a) -> None:
        if not isinstance(a, tuple) or len(a) != len(self.factors):
            raise InvalidElement(f"{a!r} is not a {len(self.factors)}-tuple")
        for F, x in zip(self.factors, a):
            F.validate(x)

    def word_of(self, a) -> RepresentativePair:
        return concat(*(F.word_of(x).shifted(off)
                        for F, x, off in zip(self.factors, a, self.offsets)))

    def parse_element(self, value):
        a = tuple(F.parse_element(v) for F, v in zip(self.factors, value))
        self.validate(a)
        return a

    def format_element(self, a) -> str:
        return "(" + ", ".join(F.format_element(x) for F, x in zip(self.factors, a)) + ")"

    def to_document(self) -> dict:
        return {"kind": "direct_product", "factors": [F.to_document() for F in self.factors]}

    def __repr__(self) -> str:
        return "<DirectProduct " + " x ".join(repr(F) for F in self.factors) + ">"
