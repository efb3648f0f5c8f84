from __future__ import annotations

import random
from typing import Sequence

import numpy as np

from ..words import RepresentativePair
from .base import Group, InvalidElement, PresentationError, closure

MAX_ORDER = 256
FULL_ASSOCIATIVITY_LIMIT = 128
SPOT_CHECKS = 20000


class FiniteGroup(Group):
    """Finite group carried by its Cayley table; elements are row indices."""

    kind = "finite"

    def __init__(self, table, generators: Sequence[int], names: Sequence[str] | None = None,
                 max_order: int = MAX_ORDER, check: bool = True, seed: int = 0):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise PresentationError("Cayley table must be a non-empty square array")
        order = arr.shape[0]
        if order > max_order:
            raise PresentationError(f"order {order} exceeds configured maximum {max_order}")
        if arr.min() < 0 or arr.max() >= order:
            raise PresentationError("table entries out of range")
        self.order = order
        self.array = arr
        self.table = tuple(tuple(int(v) for v in row) for row in arr)
        self.names = tuple(names) if names is not None else None
        if check:
            _check_latin(arr)
        ident = _find_identity(arr)
        if ident is None:
            raise PresentationError("no two-sided identity in table")
        self.identity = ident
        inv = [0] * order
        for a in range(order):
            row = self.table[a]
            inv[a] = row.index(ident)
        self.inverse_table = tuple(inv)
        if check:
            _check_associative(arr, seed)
            for a in range(order):
                if self.table[inv[a]][a] != ident:
                    raise PresentationError(f"element {a} has no two-sided inverse")
        gens = tuple(int(g) for g in generators)
        if not gens:
            raise PresentationError("generating tuple is empty")
        for g in gens:
            self.validate(g)
        self.generators = gens
        if check and len(closure(self, gens)) != order:
            raise PresentationError("generators do not generate the group")
        self._words: dict[int, RepresentativePair] | None = None

    @property
    def is_finite(self) -> bool:
        return True

    def elements(self) -> list[int]:
        return list(range(self.order))

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse_table[a]

    def validate(self, a) -> None:
        if isinstance(a, bool) or not isinstance(a, (int, np.integer)) or not 0 <= a < self.order:
            raise InvalidElement(f"{a!r} is not an element index of a group of order {self.order}")

    def with_generators(self, generators: Sequence[int]) -> "FiniteGroup":
        G = FiniteGroup.__new__(FiniteGroup)
        G.__dict__.update(self.__dict__)
        gens = tuple(int(g) for g in generators)
        for g in gens:
            self.validate(g)
        if not gens or len(closure(self, gens)) != self.order:
            raise PresentationError("generators do not generate the group")
        G.generators = gens
        G._words = None
        return G

    def word_of(self, a) -> RepresentativePair:
        if self._words is None:
            from .ball import ball
            self._words = ball(self, self.order)
        return self._words[a]

    def parse_element(self, value):
        a = int(value)
        self.validate(a)
        return a

    def format_element(self, a) -> str:
        if self.names is not None:
            return self.names[a]
        return str(a)

    def to_document(self) -> dict:
        doc = {"kind": "finite", "table": [list(r) for r in self.table],
               "generators": list(self.generators)}
        if self.names is not None:
            doc["names"] = list(self.names)
        return doc

    def __repr__(self) -> str:
        return f"<FiniteGroup order={self.order} gens={self.generators}>"


def _check_latin(arr: np.ndarray) -> None:
    n = arr.shape[0]
    want = np.arange(n)
    if not (np.sort(arr, axis=1) == want).all() or not (np.sort(arr, axis=0) == want[:, None]).all():
        raise PresentationError("table is not a Latin square")


def _find_identity(arr: np.ndarray):
    n = arr.shape[0]
    want = np.arange(n)
    for e in range(n):
        if (arr[e] == want).all() and (arr[:, e] == want).all():
            return e
    return None


def _check_associative(arr: np.ndarray, seed: int) -> None:
    n = arr.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        lhs = arr[arr]  # [a, b, c] -> (ab)c
        rhs = arr[np.arange(n)[:, None, None], arr[None, :, :]]  # a(bc)
        if not (lhs == rhs).all():
            raise PresentationError("table is not associative")
        return
    rng = random.Random(seed)
    for _ in range(SPOT_CHECKS):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if arr[arr[a, b], c] != arr[a, arr[b, c]]:
            raise PresentationError(f"associativity fails at ({a}, {b}, {c})")


def from_permutations(perms: Sequence[Sequence[int]], max_order: int = MAX_ORDER) -> FiniteGroup:
    """Finite group generated by permutations (images of 0..d-1), converted to a table.

    Elements are numbered in breadth-first discovery order from the identity;
    the generators keep their input order.  Products compose right-to-left
    as functions: ``(p*q)(i) = p(q(i))``.
    """
    perms = [tuple(int(v) for v in p) for p in perms]
    if not perms:
        raise PresentationError("need at least one permutation")
    d = len(perms[0])
    for p in perms:
        if len(p) != d or sorted(p) != list(range(d)):
            raise PresentationError(f"not a permutation of 0..{d - 1}: {p}")
    ident = tuple(range(d))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        x = elems[i]
        for p in perms:
            y = tuple(p[x[k]] for k in range(d))
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
                if len(elems) > max_order:
                    raise PresentationError(f"permutation group exceeds order {max_order}")
        i += 1
    table = [[index[tuple(a[b[k]] for k in range(d))] for b in elems] for a in elems]
    return FiniteGroup(table, [index[p] for p in perms], max_order=max_order)


def cyclic(n: int) -> FiniteGroup:
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, [1 % n])


def finite_direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Cayley table of G1 x ... x Gk; element (a1..ak) is numbered in mixed radix, first factor slowest."""
    sizes = [G.order for G in groups]
    coords = list(np.ndindex(*sizes))
    index = {c: i for i, c in enumerate(coords)}
    table = [[index[tuple(G.table[x][y] for G, x, y in zip(groups, a, b))] for b in coords]
             for a in coords]
    gens = []
    for k, G in enumerate(groups):
        for g in G.generators:
            c = [H.identity for H in groups]
            c[k] = g
            gens.append(index[tuple(c)])
    return FiniteGroup(table, gens)


def quotient_group(G: FiniteGroup, normal: Sequence[int]) -> tuple[FiniteGroup, list[int]]:
    """G/N as a table plus the map element -> coset index.

    Cosets are numbered by their smallest element; the table is checked, so a
    non-normal N is rejected.
    """
    N = sorted(set(int(x) for x in normal))
    if G.identity not in N:
        raise PresentationError("subgroup must contain the identity")
    coset_of = [-1] * G.order
    reps = []
    for x in range(G.order):
        if coset_of[x] < 0:
            c = len(reps)
            reps.append(x)
            for h in N:
                coset_of[G.mul(x, h)] = c
    for g in range(G.order):
        for h in N:
            if coset_of[G.mul(G.mul(G.inv(g), h), g)] != coset_of[G.identity]:
                raise PresentationError("subgroup is not normal")
    k = len(reps)
    table = [[coset_of[G.mul(reps[a], reps[b])] for b in range(k)] for a in range(k)]
    gens = sorted({coset_of[g] for g in G.generators} - {coset_of[G.identity]}) or [0]
    return FiniteGroup(table, gens), coset_of
