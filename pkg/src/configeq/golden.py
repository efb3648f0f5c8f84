"""Golden systems: generating tuple, finite-range classifier and word recipes.

A golden system on G with respect to a normal subgroup N is carried by a
concrete quotient map q: G -> Q.  It consists of

* a generating tuple ``gens`` of G,
* a function ``sigma`` on Q with a finite declared range,
* for every non-identity y in Q a representative pair ``pair_of(y)``
  whose word in q(gens) evaluates to y,

such that the sigma-preimage of sigma(e_Q) is exactly N.  The partition of
G into sigma level sets (pulled back along q) is the golden configuration
pair built from the system.

Constructions provided: finite quotients, polycyclic presentations, free
and direct products of systems, polynomial-type groups and subnormal
series with polynomial-type factors.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Hashable, Mapping, Sequence

from .configs import TWO_SIDED, ConfigurationPair, carrier, configuration_set
from .groups import (DirectProduct, FiniteGroup, FreeProduct, Group, PolycyclicGroup, ball,
                     closure)
from .partitions import Partition, sigma_partition, signature, signature_range
from .words import EMPTY, RepresentativePair, concat, evaluate


class GoldenSystemError(ValueError):
    pass


# -- quotient maps -----------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientMap:
    """Homomorphism from ``source`` onto ``target``.

    By default q(x) is computed by spelling x over the source generators
    and evaluating the word on ``images``.  ``func`` overrides this with a
    direct formula (identity maps, coset maps).
    """
    source: Group
    target: Group
    images: tuple
    func: Callable[[Any], Any] | None = field(default=None, compare=False)
    is_identity: bool = False

    def __call__(self, x):
        if self.func is not None:
            return self.func(x)
        return evaluate(self.source.word_of(x), self.images, self.target)

    @classmethod
    def identity(cls, G: Group) -> "QuotientMap":
        return cls(G, G, tuple(G.generators), func=lambda x: x, is_identity=True)

    @classmethod
    def from_images(cls, source: Group, target: Group, images: Sequence) -> "QuotientMap":
        images = tuple(images)
        if len(images) != source.n:
            raise ValueError(f"need {source.n} images, got {len(images)}")
        for y in images:
            target.validate(y)
        return cls(source, target, images)

    def in_kernel(self, x) -> bool:
        return self(x) == self.target.identity

    def check(self, radius: int = 4, max_pairs: int = 20000) -> list[str]:
        """Relation preservation and surjectivity problems (empty list if none found).

        Exhaustive on finite sources; on infinite sources the homomorphism
        identity is sampled on pairs from a ball.
        """
        problems = []
        S, T = self.source, self.target
        pts = S.elements() if S.is_finite else list(ball(S, radius))
        qs = {x: self(x) for x in pts}
        count = 0
        for x in pts:
            for y in pts:
                count += 1
                if count > max_pairs:
                    break
                if self(S.mul(x, y)) != T.mul(qs[x], qs[y]):
                    problems.append(f"q({x})q({y}) != q({x}{y})")
                    if len(problems) > 10:
                        return problems
        for g, img in zip(S.generators, self.images):
            if self(g) != img:
                problems.append(f"q(generator {g}) != declared image {img}")
        if T.is_finite and len(closure(T, [self(g) for g in S.generators])) != T.order:
            problems.append("images do not generate the target")
        return problems


# -- golden systems -----------------------------------------------------------------------

@dataclass(frozen=True)
class GoldenSystem:
    group: Group
    quotient: QuotientMap
    gens: tuple
    sigma: Callable[[Any], Hashable]
    sigma_range: tuple
    pair_of: Callable[[Any], RepresentativePair]
    kind: str = ""

    @property
    def target(self) -> Group:
        return self.quotient.target

    @property
    def identity_value(self) -> Hashable:
        return self.sigma(self.target.identity)

    @property
    def quotient_gens(self) -> tuple:
        return tuple(self.quotient(g) for g in self.gens)

    def value_of(self, x) -> Hashable:
        """sigma(q(x)) for x in G."""
        return self.sigma(self.quotient(x))

    def partition(self) -> Partition:
        return sigma_partition(self.sigma, self.sigma_range, q=self.quotient, G=self.group,
                               name=f"{self.kind}-sigma")

    def config_pair(self) -> ConfigurationPair:
        return golden_pair_from_system(self)

    def with_pair_override(self, y, p: RepresentativePair) -> "GoldenSystem":
        """Copy whose golden pair for the quotient element y is replaced by p."""
        base = self.pair_of

        def pair_of(z):
            return p if z == y else base(z)
        return replace(self, pair_of=pair_of)


def golden_pair_from_system(sys: GoldenSystem) -> ConfigurationPair:
    """(gens, sigma-partition) of the system."""
    return ConfigurationPair(sys.group, sys.gens, sys.partition(), check=sys.group.is_finite)


# -- finite quotients ------------------------------------------------------------------------

def _preimage(G: Group, q: QuotientMap, y, max_radius: int = 8):
    pts = G.elements() if G.is_finite else ball(G, max_radius)
    for x in pts:
        if q(x) == y:
            return x
    raise GoldenSystemError(f"no preimage of {y!r} found")


def finite_golden_system(G: Group, q: QuotientMap | None = None, augment: bool = True) -> GoldenSystem:
    """Golden system w.r.t. the kernel of a map onto a finite group.

    The generating tuple starts with an element mapping to the identity
    (G's identity is prepended when no generator does), keeps G's own
    generators, and is extended by preimages of any quotient element not
    yet covered.  Each quotient element y gets the smallest index i with
    q(g_i) = y as its sigma value and the one-letter pair ((i), (1)).
    """
    if q is None:
        q = QuotientMap.identity(G)
    Q = q.target
    if not Q.is_finite:
        raise GoldenSystemError("finite golden system needs a finite quotient")
    e = Q.identity
    gens = list(G.generators)
    if augment:
        if q(gens[0]) != e:
            gens.insert(0, G.identity)
        covered = {q(g) for g in gens}
        for y in Q.elements():
            if y not in covered:
                gens.append(_preimage(G, q, y))
                covered.add(y)
    else:
        covered = {q(g) for g in gens}
        if q(gens[0]) != e or len(covered) != Q.order:
            raise GoldenSystemError("q(gens) must list the whole quotient starting at the identity")
    first: dict = {}
    for i, g in enumerate(gens, start=1):
        first.setdefault(q(g), i)
    values = tuple(sorted(first.values()))

    def sigma(y):
        return first[y]

    def pair_of(y):
        return RepresentativePair((first[y],), (1,))
    return GoldenSystem(G, q, tuple(gens), sigma, values, pair_of, "finite")


# -- polycyclic presentations ---------------------------------------------------------------------

def polycyclic_golden_system(G: PolycyclicGroup) -> GoldenSystem:
    """Signature classifier and collected words.

    sigma keeps the exponent at finite-index positions and the sign of the
    exponent elsewhere; the golden pair of an element spells its collected
    word.  The range has prod(m_i) * 3^(n - |I|) values.
    """
    units = tuple(G.unit(i) for i in range(G.pc_length))
    return GoldenSystem(G, QuotientMap.identity(G), units, lambda x: signature(G, x),
                        signature_range(G), G.collected_pair, "polycyclic")


# -- products ---------------------------------------------------------------------------------------

def _require_absolute(systems: Sequence[GoldenSystem]) -> None:
    if not systems:
        raise GoldenSystemError("need at least one factor system")
    for s in systems:
        if not isinstance(s, GoldenSystem):
            raise GoldenSystemError(f"factor {s!r} has no golden system")
        if not s.quotient.is_identity:
            raise GoldenSystemError("factor systems must be taken w.r.t. the trivial subgroup")


FREE_IDENTITY = 0


def free_product_golden(systems: Sequence[GoldenSystem]) -> GoldenSystem:
    """Golden system on the free product of the factors' groups.

    sigma of a reduced word is the factor-tagged value ``(f, sigma_f(z_1))``
    of its first letter (f is 1-based); the identity gets the sentinel 0.
    The golden pair is the concatenation of the factors' pairs of the
    letters.
    """
    _require_absolute(systems)
    if len(systems) == 1:
        return systems[0]
    G = FreeProduct([s.group for s in systems])
    offsets, acc = [], 0
    gens = []
    for f, s in enumerate(systems):
        offsets.append(acc)
        acc += len(s.gens)
        gens.extend(G.letter(f, g) for g in s.gens)
    rng = (FREE_IDENTITY,) + tuple((f + 1, v) for f, s in enumerate(systems)
                                   for v in s.sigma_range if v != s.identity_value)

    def sigma(z):
        if not z:
            return FREE_IDENTITY
        f, w = z[0]
        return (f + 1, systems[f].sigma(w))

    def pair_of(z):
        return concat(*(systems[f].pair_of(w).shifted(offsets[f]) for f, w in z))
    return GoldenSystem(G, QuotientMap.identity(G), tuple(gens), sigma, rng, pair_of, "free_product")


def direct_product_golden(systems: Sequence[GoldenSystem]) -> GoldenSystem:
    """sigma is the tuple of factor values; golden pairs concatenate factor pairs."""
    _require_absolute(systems)
    if len(systems) == 1:
        return systems[0]
    G = DirectProduct([s.group for s in systems])
    offsets, acc = [], 0
    gens = []
    for f, s in enumerate(systems):
        offsets.append(acc)
        acc += len(s.gens)
        gens.extend(G.embed(f, g) for g in s.gens)
    rng = tuple(itertools.product(*(s.sigma_range for s in systems)))

    def sigma(x):
        return tuple(s.sigma(c) for s, c in zip(systems, x))

    def pair_of(x):
        return concat(*(s.pair_of(c).shifted(off) if c != s.group.identity else EMPTY
                        for s, c, off in zip(systems, x, offsets)))
    return GoldenSystem(G, QuotientMap.identity(G), tuple(gens), sigma, rng, pair_of,
                        "direct_product")


# -- polynomial-type groups ------------------------------------------------------------------------

_TOKENS = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(\+))")


def parse_polynomial(text: str, variables: Sequence[str]) -> list[tuple[int, list[str]]]:
    """Terms of an integer polynomial as (coefficient, factor list in written order).

    Accepts ``x*y^3 + 2*x^2*y`` as well as juxtaposed ``xy^3+2x^2y`` for
    single-letter variables.  Rejects constant terms and non-positive
    coefficients.
    """
    variables = list(variables)
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKENS.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed polynomial at {text[pos:]!r}")
        pos = m.end()
        num, name, caret, star, plus = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            if name in variables:
                toks.append(("var", name))
            elif all(ch in variables for ch in name):
                toks.extend(("var", ch) for ch in name)
            else:
                raise ValueError(f"unknown variable {name!r}")
        elif caret:
            toks.append(("^", None))
        elif star:
            continue
        else:
            toks.append(("+", None))
    terms: list[tuple[int, list[str]]] = []
    coef, factors, i = None, [], 0
    while i <= len(toks):
        if i == len(toks) or toks[i][0] == "+":
            if not factors:
                raise ValueError("constant term or empty term in polynomial")
            c = 1 if coef is None else coef
            if c <= 0:
                raise ValueError("coefficients must be positive")
            terms.append((c, factors))
            coef, factors = None, []
            i += 1
            continue
        kind, val = toks[i]
        if kind == "num":
            if factors or coef is not None:
                raise ValueError("coefficient must lead its term")
            coef = val
            i += 1
        elif kind == "var":
            exp = 1
            if i + 2 < len(toks) + 1 and i + 1 < len(toks) and toks[i + 1][0] == "^":
                if i + 2 >= len(toks) or toks[i + 2][0] != "num":
                    raise ValueError("exponent must be a number")
                exp = toks[i + 2][1]
                i += 3
            else:
                i += 1
            if exp < 1:
                raise ValueError("exponents must be positive")
            factors.extend([val] * exp)
        else:
            raise ValueError("misplaced '^'")
    return terms


def polynomial_shape(text: str, names: Mapping[str, str]) -> str:
    """Readable group expression, e.g. ``(G*H*H*H)+(G*G*H)+(G*G*H)``."""
    terms = parse_polynomial(text, list(names))
    parts = []
    for c, factors in terms:
        mono = "*".join(names[v] for v in factors)
        parts.extend([f"({mono})"] * c)
    return "+".join(parts)


def polynomial_type_golden(text: str, systems: Mapping[str, GoldenSystem]) -> GoldenSystem:
    """Substitute factor systems into the polynomial: products become free
    products, sums direct products, a coefficient c repeats its term c times."""
    terms = parse_polynomial(text, list(systems))
    summands = []
    for c, factors in terms:
        mono = free_product_golden([systems[v] for v in factors])
        summands.extend([mono] * c)
    return direct_product_golden(summands)


# -- subnormal series -------------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesLevel:
    """One step N_i -> N_i / N_(i+1) of a subnormal series.

    ``contains`` decides membership of G-elements in N_i, ``quotient`` maps
    N_i onto the factor group, ``system`` is a golden system of the factor
    (w.r.t. its trivial subgroup) and ``lifts`` are G-elements in N_i whose
    images are the system's generators.
    """
    contains: Callable[[Any], bool]
    quotient: Callable[[Any], Any]
    system: GoldenSystem
    lifts: tuple


@dataclass(frozen=True)
class SubnormalSeries:
    group: Group
    levels: tuple[SeriesLevel, ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        for i, lv in enumerate(self.levels):
            if len(lv.lifts) != len(lv.system.gens):
                raise GoldenSystemError(f"level {i}: one lift per factor generator required")
            for a, g in zip(lv.lifts, lv.system.gens):
                if not lv.contains(a):
                    raise GoldenSystemError(f"level {i}: lift {a!r} is not in N_{i}")
                if lv.quotient(a) != g:
                    raise GoldenSystemError(f"level {i}: lift {a!r} does not map to {g!r}")

    def depth(self, g) -> int:
        """Greatest i with g in N_i (len(levels) for the identity)."""
        if g == self.group.identity:
            return len(self.levels)
        d = 0
        for i, lv in enumerate(self.levels):
            if lv.contains(g):
                d = i
        return d

    def peel(self, g) -> list[tuple[int, Any, RepresentativePair]]:
        """Factor g as a product of level words with strictly increasing depth.

        Returns (depth, factor element, factor golden pair) per step.
        """
        G = self.group
        steps = []
        last = -1
        while g != G.identity:
            i = self.depth(g)
            if i <= last:
                raise GoldenSystemError(f"peeling did not descend at depth {i}")
            lv = self.levels[i]
            y = lv.quotient(g)
            if y == lv.system.group.identity:
                raise GoldenSystemError(f"{g!r} maps to the identity of factor {i} but lies no deeper")
            p = lv.system.pair_of(y)
            w = evaluate(p, lv.lifts, G)
            steps.append((i, y, p))
            g = G.mul(G.inv(w), g)
            last = i
        return steps


SERIES_IDENTITY = 0


def subnormal_series_golden(S: SubnormalSeries) -> GoldenSystem:
    """Golden system assembled along a subnormal series.

    sigma(g) is the depth-tagged factor value of the first peeled piece;
    the golden pair concatenates the factor pairs of all peeled pieces.
    """
    if len(S.levels) == 1 and S.levels[0].system.group is S.group:
        return S.levels[0].system
    G = S.group
    offsets, acc = [], 0
    gens: list = []
    for lv in S.levels:
        offsets.append(acc)
        acc += len(lv.lifts)
        gens.extend(lv.lifts)
    rng = (SERIES_IDENTITY,) + tuple((i, v) for i, lv in enumerate(S.levels)
                                     for v in lv.system.sigma_range
                                     if v != lv.system.identity_value)

    def sigma(g):
        if g == G.identity:
            return SERIES_IDENTITY
        i = S.depth(g)
        return (i, S.levels[i].system.sigma(S.levels[i].quotient(g)))

    def pair_of(g):
        return concat(*(p.shifted(offsets[i]) for i, _, p in S.peel(g)))
    return GoldenSystem(G, QuotientMap.identity(G), tuple(gens), sigma, rng, pair_of, "series")


def finite_series(G: FiniteGroup, chain: Sequence[Sequence[int]]) -> SubnormalSeries:
    """Series G = N_0 > N_1 > ... > {e} of a finite group from subgroup element lists.

    ``chain`` lists N_1, ..., N_(k-1) (G and the trivial group may be
    included or omitted).  Each factor is built as a coset table and given a
    finite golden system; lifts are smallest coset representatives.
    """
    subs = [frozenset(c) for c in chain]
    if not subs or subs[0] != frozenset(G.elements()):
        subs.insert(0, frozenset(G.elements()))
    if subs[-1] != frozenset([G.identity]):
        subs.append(frozenset([G.identity]))
    levels = []
    for i in range(len(subs) - 1):
        big, small = subs[i], subs[i + 1]
        if not small < big:
            raise GoldenSystemError("chain must be strictly decreasing")
        elems = sorted(big)
        coset: dict[int, int] = {}
        reps: list[int] = []
        for x in elems:
            if x not in coset:
                reps.append(x)
                for h in small:
                    coset[G.mul(x, h)] = len(reps) - 1
        for g in big:
            for h in small:
                if G.conj(h, g) not in small:
                    raise GoldenSystemError(f"N_{i + 1} is not normal in N_{i}")
        table = [[coset[G.mul(a, b)] for b in reps] for a in reps]
        Q = FiniteGroup(table, list(range(len(reps))))
        sys = finite_golden_system(Q)
        lifts = tuple(reps[y] for y in sys.gens)
        levels.append(SeriesLevel(contains=big.__contains__,
                                  quotient=lambda x, c=coset: c[x], system=sys, lifts=lifts))
    return SubnormalSeries(G, tuple(levels))


# -- refinement for relators (finite quotients) ------------------------------------------------

def refine_for_relators(sys: GoldenSystem, relators: Sequence[RepresentativePair]) -> Partition:
    """Refinement of the sigma-partition separating every word of length <= 3k.

    k is the longest relator length (at least 1).  Each quotient element
    reachable by a word of length <= 3k in q(gens) becomes its own block;
    what remains of each sigma block stays together.  Finite quotients only.
    """
    Q = sys.target
    if not Q.is_finite:
        raise GoldenSystemError("relator refinement is only available for finite quotients")
    k = max([len(r) for r in relators] + [1])
    reach = ball(Q, 3 * k, gens=sys.quotient_gens)
    labels: dict = {}
    count = 0
    for v in sys.sigma_range:
        block = sorted(y for y in Q.elements() if sys.sigma(y) == v)
        singles = [y for y in block if y in reach]
        for y in singles:
            count += 1
            labels[y] = count
        rest = [y for y in block if y not in reach]
        if rest:
            count += 1
            for y in rest:
                labels[y] = count
    from .partitions import from_classifier
    return from_classifier(count, lambda x: labels[sys.quotient(x)], "relator-refinement", sys.group)


# -- axiom and property checks -------------------------------------------------------------------

@dataclass
class AxiomReport:
    checked: int
    exact: bool
    radius: int | None
    word_violations: list[str] = field(default_factory=list)
    kernel_violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.word_violations and not self.kernel_violations


def verify_axioms(sys: GoldenSystem, radius: int = 4) -> AxiomReport:
    """Check q(g) = W(J_g, rho_g; q(gens)) off N and that sigma(e)'s level set is N.

    Exhaustive for finite groups, on ball(radius) otherwise.
    """
    G, Q = sys.group, sys.target
    pts = carrier(G, radius)
    qg = sys.quotient_gens
    e_val = sys.identity_value
    rep = AxiomReport(len(pts), G.is_finite, None if G.is_finite else radius)
    seen: dict = {}
    for x in pts:
        y = sys.quotient(x)
        in_n = y == Q.identity
        if (sys.sigma(y) == e_val) != in_n:
            rep.kernel_violations.append(f"{G.format_element(x)}: in N={in_n}, sigma={sys.sigma(y)!r}")
        if in_n or y in seen:
            continue
        p = sys.pair_of(y)
        seen[y] = p
        if evaluate(p, qg, Q) != y:
            rep.word_violations.append(f"{G.format_element(x)}: pair {p} does not spell q(g)")
    return rep


@dataclass
class GoldenReport:
    gate_passed: bool
    exact: bool
    radius: int | None
    checked: int = 0
    inclusion_violations: list[str] = field(default_factory=list)
    disjointness_violations: list[str] = field(default_factory=list)
    note: str = ""

    @property
    def ok(self) -> bool:
        return self.gate_passed and not self.inclusion_violations and not self.disjointness_violations


def verify_golden_property(sys: GoldenSystem, counterpart: ConfigurationPair,
                           radius: int = 4) -> GoldenReport:
    """Check the golden inclusion against a counterpart pair (h, F) on a group H.

    First the two-sided configuration sets of (gens, sigma-partition) and of
    the counterpart are compared on their carriers; if they differ the report
    says the gate failed and nothing else is checked.  Otherwise, for every
    g off N in the G-carrier, with M the block of F paired with N:

    * W(J_g, rho_g; h) M is contained in the block paired with sigma(q(g));
    * W(J_g, rho_g; h) M does not meet M.

    Only supplied counterparts can be checked; the statement quantifies over
    all of them.
    """
    own = golden_pair_from_system(sys)
    G, H = sys.group, counterpart.group
    exact = G.is_finite and H.is_finite
    rad = None if exact else radius
    T_G = configuration_set(own, TWO_SIDED, radius)
    T_H = configuration_set(counterpart, TWO_SIDED, radius)
    if T_G.configs != T_H.configs or own.m != counterpart.m:
        return GoldenReport(False, exact, rad, note="two-sided configuration sets differ")
    index = {v: i for i, v in enumerate(sys.sigma_range, start=1)}
    e_label = index[sys.identity_value]
    F = counterpart.partition
    M = [y for y in carrier(H, radius) if F.classify(y) == e_label]
    rep = GoldenReport(True, exact, rad)
    if not M:
        rep.note = "block paired with N is empty on the H-carrier"
        return rep
    done = set()
    for x in carrier(G, radius):
        qx = sys.quotient(x)
        if qx == sys.target.identity or qx in done:
            continue
        done.add(qx)
        p = sys.pair_of(qx)
        W = evaluate(p, counterpart.gens, H)
        want = index[sys.sigma(qx)]
        for y in M:
            lab = F.classify(H.mul(W, y))
            rep.checked += 1
            if lab != want:
                rep.inclusion_violations.append(
                    f"g={G.format_element(x)} pair {p}: W*{H.format_element(y)} in block {lab}, expected {want}")
            if lab == e_label:
                rep.disjointness_violations.append(
                    f"g={G.format_element(x)} pair {p}: W*{H.format_element(y)} lands back in M")
    return rep


# -- polycyclic block identities --------------------------------------------------------------

@dataclass
class FactsReport:
    radius: int
    checked: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.violations.values())


def _leading_index(x) -> int:
    for i, a in enumerate(x):
        if a:
            return i
    return len(x)


def polycyclic_facts(G: PolycyclicGroup, radius: int = 5) -> FactsReport:
    """Check the five translation identities between signature blocks on a ball.

    For x = a_i^(alpha_i) ... a_n^(alpha_n) with alpha_i != 0 (i = n + 1 for
    the identity) and E(v) the set of elements with signature v:

    (i)   i finite-index: a_i E(sig x) = E(sig a_i x)
    (ii)  k < i finite-index: a_k E(sig x) = E(sig a_k x)
    (iii) k < i infinite: a_k (E(sig x) u E(sig a_k x)) = E(sig a_k x)
    (iv)  i infinite, alpha_i < 0: a_i E(sig x) = E(sig x) u E(sig t)
    (v)   i infinite, alpha_i > 0: a_i (E(sig x) u E(sig t)) = E(sig x)

    with t = a_(i+1)^(alpha_(i+1)) ... a_n^(alpha_n).  An identity A S = T
    is checked pointwise on the ball: y in S implies a y in T, and z in T
    implies a^-1 z in S.  Membership is decided by the signature, so both
    sides are determined at every point.
    """
    n = G.pc_length
    pts = list(ball(G, radius))
    sig = {y: signature(G, y) for y in pts}

    def sg(y):
        v = sig.get(y)
        return v if v is not None else signature(G, y)

    rep = FactsReport(radius, {f: 0 for f in ("i", "ii", "iii", "iv", "v")},
                      {f: [] for f in ("i", "ii", "iii", "iv", "v")})
    jobs = {}
    for x in pts:
        i = _leading_index(x)
        vx = sg(x)
        if i < n:
            a = G.unit(i)
            if i in G.finite_index:
                jobs[("i", i, vx)] = (a, {vx}, {sg(G.mul(a, x))})
            else:
                t = (0,) * (i + 1) + tuple(x[i + 1:])
                vt = sg(t)
                if x[i] < 0:
                    jobs[("iv", i, vx, vt)] = (a, {vx}, {vx, vt})
                else:
                    jobs[("v", i, vx, vt)] = (a, {vx, vt}, {vx})
        for k in range(min(i, n)):
            a = G.unit(k)
            vk = sg(G.mul(a, x))
            if k in G.finite_index:
                jobs[("ii", k, vx)] = (a, {vx}, {vk})
            else:
                jobs[("iii", k, vx)] = (a, {vx, vk}, {vk})
    for key, (a, S, T) in sorted(jobs.items(), key=lambda kv: repr(kv[0])):
        fact = key[0]
        ai = G.inv(a)
        rep.checked[fact] += 1
        for y in pts:
            if sg(y) in S and sg(G.mul(a, y)) not in T:
                rep.violations[fact].append(f"{key}: a*{y} leaves the right side")
            if sg(y) in T and sg(G.mul(ai, y)) not in S:
                rep.violations[fact].append(f"{key}: {y} has no preimage on the left side")
    return rep
