"""One-sided and two-sided configuration sets of a configuration pair.

Finite groups are enumerated over every element, so their sets are exact.
Infinite groups are enumerated over a Cayley ball and the result only says
which configurations are witnessed at that radius.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from .groups import DEFAULT_RADIUS, Group, ball, closure
from .partitions import Partition, inverse_partition, translate

ONE_SIDED = "one-sided"
TWO_SIDED = "two-sided"
_MODES = {"con": ONE_SIDED, ONE_SIDED: ONE_SIDED, "one": ONE_SIDED,
          "tcon": TWO_SIDED, TWO_SIDED: TWO_SIDED, "two": TWO_SIDED}

MAX_SIGMA_BLOCKS = 16


def normalize_mode(mode: str) -> str:
    try:
        return _MODES[mode]
    except KeyError:
        raise ValueError(f"unknown mode {mode!r}; use con or tcon") from None


@dataclass(frozen=True)
class ConfigurationPair:
    group: Group
    gens: tuple
    partition: Partition
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("generating tuple is empty")
        if self.check:
            for g in gens:
                self.group.validate(g)
            if self.group.is_finite and len(closure(self.group, gens)) != self.group.order:
                raise ValueError("tuple does not generate the group")

    @property
    def n(self) -> int:
        return len(self.gens)

    @property
    def m(self) -> int:
        return self.partition.m


@dataclass(frozen=True)
class ConfigurationSet:
    mode: str
    configs: tuple[tuple[int, ...], ...]
    n: int
    m: int
    carrier_size: int
    radius: int | None = None  # None: whole finite group

    @property
    def exact(self) -> bool:
        return self.radius is None

    def __len__(self) -> int:
        return len(self.configs)

    def __iter__(self):
        return iter(self.configs)

    def __contains__(self, c) -> bool:
        return tuple(c) in set(self.configs)

    def as_set(self) -> frozenset:
        return frozenset(self.configs)

    def header(self) -> str:
        short = "con" if self.mode == ONE_SIDED else "tcon"
        rad = "exact" if self.exact else str(self.radius)
        return f"{short} {self.n} {self.m} {self.carrier_size} {rad}"

    def lines(self) -> list[str]:
        return [",".join(map(str, c)) for c in self.configs]

    def to_document(self) -> dict:
        return {"mode": self.mode, "n": self.n, "m": self.m, "carrier_size": self.carrier_size,
                "radius": self.radius, "configs": [list(c) for c in self.configs]}

    @classmethod
    def from_document(cls, doc: dict) -> "ConfigurationSet":
        return cls(doc["mode"], tuple(sorted(tuple(c) for c in doc["configs"])), doc["n"], doc["m"],
                   doc["carrier_size"], doc.get("radius"))


def carrier(G: Group, radius: int | None = DEFAULT_RADIUS) -> list:
    """Whole group when finite, otherwise the ball of the given radius."""
    if G.is_finite:
        return G.elements()
    return list(ball(G, DEFAULT_RADIUS if radius is None else radius))


def config_of_point(x, P: ConfigurationPair, mode: str = ONE_SIDED) -> tuple[int, ...]:
    """Block labels of x, g_1 x, ..., g_n x (and x g_1, ..., x g_n when two-sided)."""
    mode = normalize_mode(mode)
    G, lab = P.group, P.partition.classify
    c = [lab(x)] + [lab(G.mul(g, x)) for g in P.gens]
    if mode == TWO_SIDED:
        c += [lab(G.mul(x, g)) for g in P.gens]
    return tuple(c)


def configuration_set(P: ConfigurationPair, mode: str = ONE_SIDED, radius: int | None = None,
                      jobs: int = 1, points: Sequence | None = None) -> ConfigurationSet:
    """Set of configurations realised by points of the carrier, sorted lexicographically.

    ``radius`` is ignored for finite groups.  ``points`` overrides the carrier.
    With ``jobs > 1`` the carrier is split across threads and the pieces are
    merged by union, so the result does not depend on the worker count.
    """
    mode = normalize_mode(mode)
    G = P.group
    if points is None:
        pts = carrier(G, radius)
        rad = None if G.is_finite else (DEFAULT_RADIUS if radius is None else radius)
    else:
        pts = list(points)
        rad = None if (G.is_finite and len(set(pts)) == G.order) else (radius if radius is not None else -1)

    def chunk(xs):
        return {config_of_point(x, P, mode) for x in xs}

    if jobs > 1 and len(pts) > 1000:
        size = -(-len(pts) // jobs)
        with ThreadPoolExecutor(jobs) as ex:
            parts = list(ex.map(chunk, [pts[i:i + size] for i in range(0, len(pts), size)]))
        found = set().union(*parts)
    else:
        found = chunk(pts)
    return ConfigurationSet(mode, tuple(sorted(found)), P.n, P.m, len(pts), rad)


def stabilized(P: ConfigurationPair, mode: str, radius: int) -> bool:
    """Heuristic: the witnessed set did not grow from radius to radius+1.  Not a proof."""
    a = configuration_set(P, mode, radius)
    b = configuration_set(P, mode, radius + 1)
    return a.configs == b.configs


def project_two_sided(T: ConfigurationSet) -> ConfigurationSet:
    """Drop the right-multiplication labels: (c_0..c_2n) -> (c_0..c_n)."""
    if T.mode != TWO_SIDED:
        raise ValueError("expected a two-sided configuration set")
    configs = tuple(sorted({c[:T.n + 1] for c in T.configs}))
    return ConfigurationSet(ONE_SIDED, configs, T.n, T.m, T.carrier_size, T.radius)


def project_right(T: ConfigurationSet) -> ConfigurationSet:
    """(c_0, c_{n+1}, ..., c_2n), which is Con(g^-1, E^-1) evaluated at x^-1."""
    if T.mode != TWO_SIDED:
        raise ValueError("expected a two-sided configuration set")
    configs = tuple(sorted({(c[0],) + c[T.n + 1:] for c in T.configs}))
    return ConfigurationSet(ONE_SIDED, configs, T.n, T.m, T.carrier_size, T.radius)


def inverted_pair(P: ConfigurationPair) -> ConfigurationPair:
    """(g^-1, E^-1)"""
    G = P.group
    return ConfigurationPair(G, tuple(G.inv(g) for g in P.gens), inverse_partition(P.partition, G),
                             check=False)


def check_translation_invariance(P: ConfigurationPair, g, mode: str = ONE_SIDED,
                                 radius: int | None = None) -> bool:
    """Con(g, E) == Con(g, E g).

    Exact on finite groups.  On infinite groups both sets are taken over the
    same ball, which is only advisory.
    """
    G = P.group
    moved = ConfigurationPair(G, P.gens, translate(P.partition, G, g), check=False)
    return (configuration_set(P, mode, radius).configs
            == configuration_set(moved, mode, radius).configs)


# -- lemma on corresponding members ----------------------------------------------

@dataclass
class CorrespondenceReport:
    hypothesis_holds: bool
    checked: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.hypothesis_holds and not self.violations


def check_correspondence_implications(P_G: ConfigurationPair, P_H: ConfigurationPair) -> CorrespondenceReport:
    """Check the four inclusion/equality transfers between corresponding σ-members.

    With blocks paired by position, a member of σ(E) is a union of blocks
    and corresponds to the union of the same-labelled blocks of F.  For every
    generator index r and member label set S1 the images g_r A1 and A1 g_r
    are computed on elements; every S2 is then covered at once, since
    g_r A1 ⊆ A2 holds exactly when the labels met by g_r A1 lie in S2.
    Finite groups only; at most 16 blocks.
    """
    G, H = P_G.group, P_H.group
    if not (G.is_finite and H.is_finite):
        raise TypeError("correspondence check needs finite groups")
    if P_G.m != P_H.m or P_G.n != P_H.n:
        return CorrespondenceReport(False, violations=["pair shapes differ"])
    if P_G.m > MAX_SIGMA_BLOCKS:
        raise ValueError(f"at most {MAX_SIGMA_BLOCKS} blocks supported")
    if configuration_set(P_G, TWO_SIDED).configs != configuration_set(P_H, TWO_SIDED).configs:
        return CorrespondenceReport(False, violations=["two-sided configuration sets differ"])

    m = P_G.m
    rep = CorrespondenceReport(True)
    for r in range(P_G.n):
        sides = []
        for P in (P_G, P_H):
            K, g = P.group, P.gens[r]
            blocks = P.partition.blocks_on(K.elements())
            left = [frozenset(K.mul(g, x) for x in b) for b in blocks]
            right = [frozenset(K.mul(x, g) for x in b) for b in blocks]
            sides.append((K, P.partition, blocks, left, right))
        for mask in range(1 << m):
            S1 = [k for k in range(m) if mask >> k & 1]
            rep.checked += 1
            for which, name in ((3, "left"), (4, "right")):
                hits, exact = [], []
                for side in sides:
                    image = frozenset().union(*(side[which][k] for k in S1))
                    labels = frozenset(side[1].classify(y) - 1 for y in image)
                    hits.append(labels)
                    exact.append(sum(len(side[2][k]) for k in labels) == len(image))
                # g_r A1 <= A2 iff labels(g_r A1) <= S2, so the implication
                # holds for every S2 exactly when H's labels are among G's
                if not hits[1] <= hits[0]:
                    rep.violations.append(
                        f"r={r + 1} {name} inclusion S1={S1} S2={sorted(hits[0])}")
                # g_r A1 = A2 forces S2 = labels(g_r A1) and g_r A1 a union of blocks
                if exact[0] and (not exact[1] or hits[1] != hits[0]):
                    rep.violations.append(
                        f"r={r + 1} {name} equality S1={S1} S2={sorted(hits[0])}")
    return rep


# -- normal subsets and block stabilizers --------------------------------------------

def normal_subset_check(G: Group, E, gens: Sequence | None = None,
                        radius: int | None = None) -> bool:
    """E g_i == g_i E for every generator.

    ``E`` is an element collection (finite groups) or a membership predicate.
    With a predicate on an infinite group the identity is tested pointwise on
    a ball: x in E iff g^-1 x g in E and iff g x g^-1 in E.
    """
    gens = G.generators if gens is None else tuple(gens)
    if callable(E):
        member: Callable[[Any], bool] = E
        pts = carrier(G, radius)
        for g in gens:
            gi = G.inv(g)
            for x in pts:
                inside = member(x)
                if member(G.mul(G.mul(gi, x), g)) != inside or member(G.mul(G.mul(g, x), gi)) != inside:
                    return False
        return True
    Eset = frozenset(E)
    for g in gens:
        if frozenset(G.mul(x, g) for x in Eset) != frozenset(G.mul(g, x) for x in Eset):
            return False
    return True


def block_stabilizer(H: Group, M: Iterable) -> list:
    """{h in H : h M = M}, checked to be a subgroup (and normal when M is a normal subset)."""
    if not H.is_finite:
        raise TypeError("block stabilizer needs a finite group")
    M = frozenset(M)
    if not M:
        raise ValueError("M must be non-empty")
    stab = [h for h in H.elements() if frozenset(H.mul(h, x) for x in M) == M]
    S = set(stab)
    assert H.identity in S
    for a in stab:
        assert H.inv(a) in S, "stabilizer not closed under inverses"
        for b in stab:
            assert H.mul(a, b) in S, "stabilizer not closed under products"
    if normal_subset_check(H, M):
        for g in H.generators:
            assert {H.conj(a, g) for a in stab} == S, "stabilizer of a normal subset is not normal"
    return stab


def is_normal_subgroup(H: Group, S: Iterable) -> bool:
    S = set(S)
    return all(H.conj(a, g) in S for a in S for g in H.generators)
