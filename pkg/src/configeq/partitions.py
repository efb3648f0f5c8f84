"""Finite partitions of groups as total classifiers.

A :class:`Partition` assigns each element a label in ``1..m``.  Block order
is significant: the i-th block of one partition corresponds to the i-th
block of another.  On finite groups the blocks are also materialized; on
infinite groups a partition is only its classifier and is inspected on
finite carriers such as balls.
"""
from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from .groups import FreeProduct, Group, PolycyclicGroup


class EmptyBlockError(ValueError):
    pass


class EmptyBlockWarning(UserWarning):
    pass


class NotARefinement(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    m: int
    classify: Callable[[Any], int]
    blocks: tuple[frozenset, ...] | None = None
    name: str = ""

    def label(self, x) -> int:
        return self.classify(x)

    def block(self, i: int) -> frozenset:
        if self.blocks is None:
            raise TypeError("partition has no materialized blocks")
        return self.blocks[i - 1]

    def blocks_on(self, carrier: Iterable) -> list[set]:
        """Blocks intersected with a finite carrier, in label order."""
        out: list[set] = [set() for _ in range(self.m)]
        for x in carrier:
            out[self.classify(x) - 1].add(x)
        return out

    def labels_on(self, carrier: Iterable) -> dict:
        return {x: self.classify(x) for x in carrier}


def _lookup_classifier(labels: Mapping) -> Callable[[Any], int]:
    def classify(x):
        try:
            return labels[x]
        except KeyError:
            raise ValueError(f"element {x!r} is not in the partitioned carrier") from None
    return classify


def from_blocks(G: Group, blocks: Sequence[Iterable], name: str = "") -> Partition:
    """Partition of a finite group from explicit element lists (no empty blocks allowed)."""
    if not G.is_finite:
        raise TypeError("explicit blocks need a finite group; use a classifier")
    labels: dict = {}
    frozen = []
    for i, blk in enumerate(blocks, start=1):
        blk = frozenset(blk)
        if not blk:
            raise EmptyBlockError(f"block {i} is empty")
        for x in blk:
            G.validate(x)
            if x in labels:
                raise ValueError(f"element {x!r} lies in blocks {labels[x]} and {i}")
            labels[x] = i
        frozen.append(blk)
    missing = [x for x in G.elements() if x not in labels]
    if missing:
        raise ValueError(f"blocks do not cover the group; missing {missing[:5]}")
    return Partition(len(frozen), _lookup_classifier(labels), tuple(frozen), name)


def from_labels(G: Group, labels: Sequence[int] | Mapping, name: str = "") -> Partition:
    """Finite partition from a label per element (labels 1..m, all used)."""
    elems = G.elements()
    if not isinstance(labels, Mapping):
        labels = dict(zip(elems, labels))
    m = max(labels.values())
    blocks: list[set] = [set() for _ in range(m)]
    for x in elems:
        blocks[labels[x] - 1].add(x)
    return from_blocks(G, blocks, name)


def from_classifier(m: int, classify: Callable[[Any], int], name: str = "",
                    G: Group | None = None) -> Partition:
    """Classifier-backed partition; materializes blocks when G is finite."""
    if G is not None and G.is_finite:
        blocks: list[set] = [set() for _ in range(m)]
        for x in G.elements():
            lab = classify(x)
            if not 1 <= lab <= m:
                raise ValueError(f"label {lab} outside 1..{m}")
            blocks[lab - 1].add(x)
        return from_blocks(G, blocks, name)
    return Partition(m, classify, None, name)


def constant(G: Group | None = None) -> Partition:
    return from_classifier(1, lambda x: 1, "constant", G)


def check_blocks(P: Partition, carrier: Iterable, exact: bool, radius: int | None = None) -> list[int]:
    """Labels with no element on the carrier.

    An empty block on a whole finite group is an error; on a ball it is only
    a warning, since a larger ball may populate it.
    """
    seen = {P.classify(x) for x in carrier}
    empty = [i for i in range(1, P.m + 1) if i not in seen]
    if empty:
        if exact:
            raise EmptyBlockError(f"blocks {empty} are empty")
        warnings.warn(f"blocks {empty} are empty on the ball of radius {radius}",
                      EmptyBlockWarning, stacklevel=2)
    return empty


# -- ς-partitions ---------------------------------------------------------------

def sigma_partition(sigma: Callable[[Any], Hashable], values: Sequence[Hashable],
                    q: Callable[[Any], Any] | None = None, G: Group | None = None,
                    name: str = "sigma") -> Partition:
    """Level sets of a finite-range function, pulled back along q.

    Block i is q^-1(sigma^-1(values[i-1])).
    """
    index = {v: i for i, v in enumerate(values, start=1)}
    if len(index) != len(values):
        raise ValueError("declared range has repeated values")

    def classify(x):
        v = sigma(q(x) if q is not None else x)
        try:
            return index[v]
        except KeyError:
            raise ValueError(f"value {v!r} outside the declared range") from None

    if G is not None and G.is_finite:
        blocks: list[set] = [set() for _ in values]
        for x in G.elements():
            blocks[classify(x) - 1].add(x)
        labels = {x: i for i, blk in enumerate(blocks, start=1) for x in blk}
        return Partition(len(values), _lookup_classifier(labels),
                         tuple(frozenset(b) for b in blocks), name)
    return Partition(len(values), classify, None, name)


def preimage_partition(q: Callable[[Any], Any], E: Partition, G: Group | None = None) -> Partition:
    """q^-1(E) = {q^-1(E_i)} on the source of q."""
    return from_classifier(E.m, lambda x: E.classify(q(x)), f"preimage({E.name})", G)


def refine(E: Partition, splitter: Partition, G: Group | None = None) -> Partition:
    """Common refinement; labels are (E label, splitter label) in lexicographic order.

    On a finite group empty intersections are dropped.  On an infinite group
    every combination is kept, so some blocks may be empty.
    """
    combos = list(itertools.product(range(1, E.m + 1), range(1, splitter.m + 1)))
    if G is not None and G.is_finite:
        present = sorted({(E.classify(x), splitter.classify(x)) for x in G.elements()})
        index = {c: i for i, c in enumerate(present, start=1)}
        return from_classifier(len(present),
                               lambda x: index[(E.classify(x), splitter.classify(x))],
                               "refine", G)
    index = {c: i for i, c in enumerate(combos, start=1)}
    return Partition(len(combos), lambda x: index[(E.classify(x), splitter.classify(x))],
                     None, "refine")


def coarsen(E: Partition, merge: Mapping[int, int] | Sequence[int], G: Group | None = None) -> Partition:
    """Merge blocks: old label i goes to new label merge[i] (labels 1..k, all used)."""
    if not isinstance(merge, Mapping):
        merge = {i: v for i, v in enumerate(merge, start=1)}
    if set(merge) != set(range(1, E.m + 1)):
        raise ValueError("merge map must cover every block label")
    k = max(merge.values())
    if set(merge.values()) != set(range(1, k + 1)):
        raise ValueError("merged labels must be 1..k without gaps")
    return from_classifier(k, lambda x: merge[E.classify(x)], "coarsen", G)


def translate(E: Partition, G: Group, g) -> Partition:
    """E g = {E_1 g, ..., E_m g}: x lies in E_i g iff x g^-1 lies in E_i."""
    gi = G.inv(g)
    return from_classifier(E.m, lambda x: E.classify(G.mul(x, gi)), f"{E.name}*g", G)


def inverse_partition(E: Partition, G: Group) -> Partition:
    """E^-1 = {E_1^-1, ..., E_m^-1}."""
    return from_classifier(E.m, lambda x: E.classify(G.inv(x)), f"{E.name}^-1", G)


# -- σ-algebras, correspondence, similarity ----------------------------------------

@dataclass(frozen=True)
class SigmaAlgebra:
    """Finite σ-algebra on a carrier, stored by its atoms.

    A member is named by the set of atom indices (0-based) it is the union of.
    """
    atoms: tuple[frozenset, ...]
    carrier: frozenset

    def member(self, labels: Iterable[int]) -> frozenset:
        out: set = set()
        for i in labels:
            out |= self.atoms[i]
        return frozenset(out)

    def members(self) -> Iterable[tuple[frozenset, frozenset]]:
        """(atom index set, element set) for all 2^k members."""
        k = len(self.atoms)
        for mask in range(1 << k):
            idx = frozenset(i for i in range(k) if mask >> i & 1)
            yield idx, self.member(idx)

    def as_partition(self) -> Partition:
        labels = {x: i for i, a in enumerate(self.atoms, start=1) for x in a}
        return Partition(len(self.atoms), _lookup_classifier(labels), self.atoms, "atoms")

    def contains(self, A: Iterable) -> bool:
        A = frozenset(A)
        return all(a <= A or not (a & A) for a in self.atoms)


def sigma_generate(blocks: Sequence[Iterable], carrier: Iterable) -> SigmaAlgebra:
    """σ-algebra generated by subsets of a finite carrier.

    Atoms are the non-empty sets of points sharing the same membership
    pattern across the generating subsets.
    """
    carrier = list(dict.fromkeys(carrier))
    if not carrier:
        raise ValueError("empty carrier")
    sets = [frozenset(b) for b in blocks]
    groups: dict[tuple[bool, ...], list] = {}
    for x in carrier:
        groups.setdefault(tuple(x in s for s in sets), []).append(x)
    atoms = tuple(frozenset(v) for v in groups.values())
    return SigmaAlgebra(atoms, frozenset(carrier))


def hit_set(A: Iterable, E: Partition) -> frozenset[int]:
    """{k : E_k meets A}"""
    return frozenset(E.classify(x) for x in A)


def corresponding(A: Iterable, B: Iterable, E: Partition, F: Partition) -> bool:
    """A <-> B: A and B meet blocks with the same labels."""
    if E.m != F.m:
        raise ValueError(f"block counts differ: {E.m} != {F.m}")
    return hit_set(A, E) == hit_set(B, F)


def is_refinement(fine: Partition, coarse: Partition, carrier: Iterable) -> bool:
    owner: dict[int, int] = {}
    for x in carrier:
        f, c = fine.classify(x), coarse.classify(x)
        if owner.setdefault(f, c) != c:
            return False
    return True


def fine_index_sets(fine: Partition, coarse: Partition, carrier: Iterable) -> list[frozenset[int]]:
    """For each coarse block k, {l : E_k meets E'_l}."""
    out: list[set] = [set() for _ in range(coarse.m)]
    for x in carrier:
        out[coarse.classify(x) - 1].add(fine.classify(x))
    return [frozenset(s) for s in out]


def similar(E_fine: Partition, E: Partition, F_fine: Partition, F: Partition,
            carrier_G: Iterable, carrier_H: Iterable) -> bool:
    """(E', E) ~ (F', F): every coarse block splits into the same fine labels on both sides."""
    carrier_G, carrier_H = list(carrier_G), list(carrier_H)
    if not is_refinement(E_fine, E, carrier_G) or not is_refinement(F_fine, F, carrier_H):
        raise NotARefinement("fine partition does not refine the coarse one")
    if E.m != F.m or E_fine.m != F_fine.m:
        return False
    return fine_index_sets(E_fine, E, carrier_G) == fine_index_sets(F_fine, F, carrier_H)


# -- builtin classifiers ---------------------------------------------------------------

def signature(G: PolycyclicGroup, x) -> tuple[int, ...]:
    """Exponents at finite-index positions, signs elsewhere."""
    return tuple(v if j in G.finite_index else (v > 0) - (v < 0) for j, v in enumerate(x))


def signature_range(G: PolycyclicGroup) -> tuple[tuple[int, ...], ...]:
    """All signature values, the identity's all-zero signature first."""
    axes = [range(G.rel_orders[j]) if j in G.finite_index else (0, 1, -1)
            for j in range(G.pc_length)]
    return tuple(itertools.product(*axes))


def coset_partition(G: Group, subgroup: Iterable) -> Partition:
    """Left cosets xN of a finite subgroup, ordered by their smallest element (N first)."""
    N = sorted(set(subgroup))
    labels: dict = {}
    blocks = []
    for x in G.elements():
        if x not in labels:
            blk = frozenset(G.mul(x, h) for h in N)
            if len(blk) != len(N) or any(y in labels for y in blk):
                raise ValueError("subset is not a subgroup")
            blocks.append(blk)
            for y in blk:
                labels[y] = len(blocks)
    return Partition(len(blocks), _lookup_classifier(labels), tuple(blocks), "coset_of")


def first_letter_partition(G: FreeProduct) -> Partition:
    """Label 1 for the identity, label f+1 for reduced words starting in factor f (1-based)."""
    k = len(G.factors)
    return Partition(k + 1, lambda z: 1 if not z else z[0][0] + 2, None, "first_letter_factor")


def partition_from_document(G: Group, doc: dict) -> Partition:
    if "blocks" in doc:
        return from_blocks(G, [[G.parse_element(v) for v in blk] for blk in doc["blocks"]])
    if "labels" in doc:
        return from_labels(G, doc["labels"])
    name = doc.get("classifier")
    params = doc.get("params", {})
    if name == "constant":
        return constant(G)
    if name == "sign_vector":
        if not isinstance(G, PolycyclicGroup):
            raise TypeError("sign_vector needs a polycyclic group")
        return sigma_partition(lambda x: signature(G, x), signature_range(G), name="sign_vector")
    if name == "coset_of":
        return coset_partition(G, [G.parse_element(v) for v in params["subgroup"]])
    if name == "first_letter_factor":
        if not isinstance(G, FreeProduct):
            raise TypeError("first_letter_factor needs a free product")
        return first_letter_partition(G)
    raise ValueError(f"unknown partition document {doc!r}")


def partition_to_document(G: Group, P: Partition) -> dict:
    if P.blocks is None:
        raise TypeError("only materialized partitions serialize to blocks")
    return {"blocks": [sorted(b, key=_sort_key) for b in P.blocks]}


def _sort_key(x):
    return (0, x) if isinstance(x, int) else (1, repr(x))


def summarize(P: Partition, carrier: Iterable, G: Group, show: int = 10) -> list[str]:
    """One line per block: label -> up to ``show`` representatives on the carrier."""
    lines = []
    for i, blk in enumerate(P.blocks_on(carrier), start=1):
        items = list(blk)
        try:
            items.sort()
        except TypeError:
            items.sort(key=repr)
        reps = ", ".join(G.format_element(x) for x in items[:show])
        more = f" ... (+{len(items) - show})" if len(items) > show else ""
        lines.append(f"{i} -> {reps}{more}" if items else f"{i} -> (empty)")
    return lines
