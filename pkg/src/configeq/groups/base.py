from __future__ import annotations

import hashlib
import json
from typing import Any, Hashable, Iterable, Sequence

from ..words import RepresentativePair, evaluate


class InvalidElement(ValueError):
    """An element value does not have the shape or range required by its group."""


class PresentationError(ValueError):
    """A group description is malformed or fails a consistency check."""


class Group:
    """Common surface of every concrete group kind.

    Elements are plain hashable values in canonical normal form, so ``==``
    on elements is group equality.  ``mul``/``inv`` skip validation and are
    the hot path; the module-level :func:`multiply` and :func:`inverse`
    validate their arguments first.
    """

    kind: str = ""
    generators: tuple
    identity: Hashable

    # subclasses override
    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def validate(self, a) -> None:
        raise NotImplementedError

    def word_of(self, a) -> RepresentativePair:
        """A word over ``self.generators`` evaluating to ``a``."""
        raise NotImplementedError

    def to_document(self) -> dict:
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def n(self) -> int:
        return len(self.generators)

    def elements(self) -> list:
        raise TypeError(f"{self.kind} group has no finite element list")

    def power(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result, base = self.identity, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def product(self, items: Iterable):
        result = self.identity
        for x in items:
            result = self.mul(result, x)
        return result

    def conj(self, a, g):
        """g^-1 a g"""
        return self.mul(self.mul(self.inv(g), a), g)

    def evaluate(self, p: RepresentativePair, elements: Sequence | None = None):
        return evaluate(p, self.generators if elements is None else elements, self)

    def parse_element(self, value: Any):
        """Element from its document/JSON form."""
        raise NotImplementedError

    def format_element(self, a) -> str:
        return str(a)

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_document(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def __repr__(self) -> str:
        return f"<{type(self).__name__} n={self.n}>"


def identity(G: Group):
    return G.identity


def multiply(G: Group, a, b):
    G.validate(a)
    G.validate(b)
    return G.mul(a, b)


def inverse(G: Group, a):
    G.validate(a)
    return G.inv(a)


def equal(G: Group, a, b) -> bool:
    G.validate(a)
    G.validate(b)
    return a == b


def closure(G: Group, gens: Sequence, limit: int | None = None) -> set:
    """Subgroup generated by ``gens`` (left multiplication orbit of the identity).

    For finite groups the orbit of the identity under multiplication by the
    generators is the generated subgroup; ``limit`` aborts infinite runs.
    """
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(g, x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if limit is not None and len(seen) > limit:
                        raise OverflowError(f"closure exceeded {limit} elements")
        frontier = nxt
    return seen


def generates(G: Group, gens: Sequence) -> bool:
    if not G.is_finite:
        raise TypeError("generation is decidable here only for finite groups")
    return len(closure(G, gens)) == G.order
