"""Bounded configuration-equivalence search between small finite groups.

For a bound on the tuple length n and the block count k, the set

    K(G; n, k) = { Con(g, E) up to block relabelling :
                   g a generating n-tuple, E a partition with k non-empty blocks }

is computed exhaustively with numpy.  Generating tuples are grouped by the
canonical form of their left Cayley action (tuples in one class differ by
an automorphism and realise the same configuration sets), and partitions
are enumerated as restricted-growth strings.  Two groups are matched within
bounds when every K agrees, and distinguished when some configuration set
of one group is missing from the exhaustively searched other group.

Certificates embed both group documents and are replayed with the scalar
configuration engine of :mod:`configeq.configs`.
"""
from __future__ import annotations

import hashlib
import itertools
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb, factorial

import numpy as np

from .configs import ONE_SIDED, TWO_SIDED, ConfigurationPair, configuration_set, normalize_mode
from .groups import FiniteGroup, ball, closure, group_from_document
from .partitions import Partition
from .words import format_pair

MATCHED = "matched"
DISTINGUISHED = "distinguished"
INCONCLUSIVE = "inconclusive"

_CHUNK = 1 << 15


@dataclass(frozen=True)
class SearchBounds:
    max_word_len: int | None = None  # None: every element is a candidate generator
    max_blocks: int = 3
    max_gens: int = 2
    max_candidates: int = 5_000_000  # tuple classes x partitions, per (n, k)
    max_order: int = 24

    def __post_init__(self):
        for name in ("max_blocks", "max_gens", "max_candidates", "max_order"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.max_word_len is not None and self.max_word_len < 0:
            raise ValueError("max_word_len must be non-negative")


@dataclass
class Verdict:
    status: str
    mode: str
    bounds: SearchBounds
    certificate: dict | None = None
    stats: dict = field(default_factory=dict)

    def to_document(self) -> dict:
        return {"status": self.status, "mode": self.mode, "bounds": asdict(self.bounds),
                "certificate": self.certificate, "stats": self.stats}

    @classmethod
    def from_document(cls, doc: dict) -> "Verdict":
        return cls(doc["status"], doc["mode"], SearchBounds(**doc["bounds"]),
                   doc.get("certificate"), doc.get("stats", {}))


class SearchCapExceeded(RuntimeError):
    pass


# -- enumeration --------------------------------------------------------------------------------

def stirling2(N: int, k: int) -> int:
    """Number of partitions of N points into exactly k non-empty blocks."""
    return sum((-1) ** j * comb(k, j) * (k - j) ** N for j in range(k + 1)) // factorial(k)


def rgs_array(N: int, k: int) -> np.ndarray:
    """All restricted-growth strings of length N with exactly k blocks, lexicographic."""
    if k < 1 or k > N:
        return np.zeros((0, N), dtype=np.uint8)
    rows = np.zeros((1, 1), dtype=np.uint8)
    mx = np.zeros(1, dtype=np.int16)
    for pos in range(1, N):
        remaining = N - pos - 1
        parts, maxes = [], []
        for v in range(k):
            ok = (v <= mx + 1)
            new_mx = np.maximum(mx, v)
            ok &= new_mx + 1 + remaining >= k
            if ok.any():
                parts.append(np.hstack([rows[ok], np.full((ok.sum(), 1), v, dtype=np.uint8)]))
                maxes.append(new_mx[ok])
        rows = np.vstack(parts)
        mx = np.concatenate(maxes)
        order = np.lexsort(rows.T[::-1])
        rows, mx = rows[order], mx[order]
    return rows[mx == k - 1]


def candidate_elements(H: FiniteGroup, max_word_len: int | None) -> list[int]:
    if max_word_len is None:
        return H.elements()
    return sorted(ball(H, max_word_len))


def cayley_form(H: FiniteGroup, gens) -> tuple:
    """Left Cayley action of a generating tuple, relabelled by BFS from the identity.

    Equal forms mean an automorphism carries one tuple to the other.
    """
    label = {H.identity: 0}
    order = [H.identity]
    for x in order:
        for g in gens:
            y = H.mul(g, x)
            if y not in label:
                label[y] = len(order)
                order.append(y)
    return tuple(tuple(label[H.mul(g, x)] for g in gens) for x in order)


def tuple_classes(H: FiniteGroup, n: int, max_word_len: int | None) -> tuple[list[tuple], bool]:
    """One generating n-tuple per automorphism class, in lexicographic order.

    Returns the representatives and whether every element was a candidate.
    """
    cands = candidate_elements(H, max_word_len)
    seen = set()
    reps = []
    for t in itertools.product(cands, repeat=n):
        if len(closure(H, t)) != H.order:
            continue
        form = cayley_form(H, t)
        if form not in seen:
            seen.add(form)
            reps.append(t)
    return reps, len(cands) == H.order


# -- vectorised configuration keys ------------------------------------------------------------

def _positions(H: FiniteGroup, gens, mode: str) -> np.ndarray:
    arr = H.array
    cols = [np.arange(H.order)] + [arr[g, :] for g in gens]
    if mode == TWO_SIDED:
        cols += [arr[:, g] for g in gens]
    return np.stack(cols)  # (d, N)


class KeySpace:
    """Presence bitsets over configuration codes, canonical under block relabelling."""

    def __init__(self, k: int, d: int):
        self.k, self.d = k, d
        self.size = k ** d
        self.perms = [np.array(p, dtype=np.uint8) for p in itertools.permutations(range(k))]
        self.weights = (k ** np.arange(d)).astype(np.int64)
        width = -(-self.size // 8)
        self.words = -(-width // 8)

    def presence(self, labels: np.ndarray, pos: np.ndarray) -> np.ndarray:
        """labels (B, N) -> presence (B, size) for the configurations of every point."""
        B = labels.shape[0]
        codes = np.zeros((B, pos.shape[1]), dtype=np.int64)
        for j in range(self.d):
            codes += labels[:, pos[j]].astype(np.int64) * self.weights[j]
        pres = np.zeros((B, self.size), dtype=bool)
        pres[np.arange(B)[:, None], codes] = True
        return pres

    def _packed_words(self, pres: np.ndarray) -> np.ndarray:
        """Presence rows as big-endian uint64 words, so row order is lexicographic."""
        packed = np.packbits(pres, axis=1)
        pad = self.words * 8 - packed.shape[1]
        if pad:
            packed = np.hstack([packed, np.zeros((len(packed), pad), dtype=np.uint8)])
        return packed.view(">u8").astype(np.uint64)

    def canonical(self, labels: np.ndarray, pos: np.ndarray) -> np.ndarray:
        """Smallest packed presence row over all relabellings of each labelling."""
        best = None
        for p in self.perms:
            cur = self._packed_words(self.presence(p[labels], pos))
            if best is None:
                best = cur
                continue
            less = np.zeros(len(cur), dtype=bool)
            undecided = np.ones(len(cur), dtype=bool)
            for w in range(self.words):
                a, b = cur[:, w], best[:, w]
                less |= undecided & (a < b)
                undecided &= a == b
            best[less] = cur[less]
        return best

    def key_of_configs(self, configs) -> bytes:
        """Canonical key of an explicit configuration set with labels 0..k-1."""
        configs = [tuple(c) for c in configs]
        # one pseudo-point per configuration, position j reading digit j
        labels = np.array([[c[j] for c in configs for j in range(self.d)]], dtype=np.uint8)
        pos = np.arange(len(configs) * self.d).reshape(len(configs), self.d).T
        return self.canonical(labels, pos)[0].tobytes()


def _tuple_keys(H: FiniteGroup, gens, parts: np.ndarray, space: KeySpace, mode: str) -> dict:
    """Canonical key -> index of the first partition realising it, for one tuple."""
    pos = _positions(H, gens, mode)
    found: dict[bytes, int] = {}
    for start in range(0, len(parts), _CHUNK):
        keys = np.ascontiguousarray(space.canonical(parts[start:start + _CHUNK], pos))
        flat = keys.view(np.dtype((np.void, keys.shape[1] * 8))).ravel()
        uniq, idx = np.unique(flat, return_index=True)
        for row, i in zip(uniq, idx):
            found.setdefault(row.tobytes(), start + int(i))
    return found


@dataclass
class KeySet:
    keys: dict          # key -> (tuple, partition index) of first witness
    tuples: int
    partitions: int
    exhaustive: bool

    def digest(self) -> str:
        h = hashlib.sha256()
        for k in sorted(self.keys):
            h.update(k)
        return h.hexdigest()[:16]


def key_set(H: FiniteGroup, n: int, k: int, mode: str, bounds: SearchBounds,
            jobs: int = 1) -> KeySet:
    """K(H; n, k) with first witnesses in deterministic order."""
    reps, full = tuple_classes(H, n, bounds.max_word_len)
    n_parts = stirling2(H.order, k)
    if len(reps) * n_parts > bounds.max_candidates:
        raise SearchCapExceeded(f"{len(reps)} tuples x {n_parts} partitions exceeds the cap")
    parts = rgs_array(H.order, k)
    space = KeySpace(k, 1 + n * (2 if mode == TWO_SIDED else 1))

    def work(t):
        return _tuple_keys(H, t, parts, space, mode)
    if jobs > 1 and len(reps) > 1:
        with ThreadPoolExecutor(jobs) as ex:
            results = list(ex.map(work, reps))
    else:
        results = [work(t) for t in reps]
    keys: dict = {}
    for t, res in zip(reps, results):  # ordered reduction
        for key, i in res.items():
            keys.setdefault(key, (t, i))
    return KeySet(keys, len(reps), n_parts, full)


# -- pairs and certificates -------------------------------------------------------------------------

def _labelled(H: FiniteGroup, labels, m: int, name: str = "") -> Partition:
    """Partition from per-element labels in 1..m; unused labels stay as empty blocks."""
    lab = {x: int(v) for x, v in zip(H.elements(), labels)}
    if any(not 1 <= v <= m for v in lab.values()):
        raise ValueError(f"labels must lie in 1..{m}")
    blocks = tuple(frozenset(x for x, v in lab.items() if v == i) for i in range(1, m + 1))
    return Partition(m, lab.__getitem__, blocks, name)


def _pair_from(H: FiniteGroup, gens, labels) -> ConfigurationPair:
    """Pair from an RGS row (labels 0..k-1)."""
    return ConfigurationPair(H, tuple(gens), _labelled(H, [int(v) + 1 for v in labels], int(max(labels)) + 1))


def _compress(P: ConfigurationPair, mode: str):
    """Configuration set with labels renumbered 0..k-1 by sorted order of use."""
    C = configuration_set(P, mode)
    used = sorted({v for c in C.configs for v in c})
    ren = {v: i for i, v in enumerate(used)}
    return [tuple(ren[v] for v in c) for c in C.configs], used


def _align(P_G: ConfigurationPair, H: FiniteGroup, h_gens, h_labels, mode: str) -> ConfigurationPair | None:
    """Relabel an H partition so its configuration set equals that of P_G exactly."""
    target = configuration_set(P_G, mode).configs
    _, used = _compress(P_G, mode)
    for perm in itertools.permutations(used):
        labels = [perm[int(v)] for v in h_labels]
        cand = ConfigurationPair(H, tuple(h_gens), _labelled(H, labels, P_G.m, "aligned"))
        if configuration_set(cand, mode).configs == target:
            return cand
    return None


def pair_document(P: ConfigurationPair) -> dict:
    G = P.group
    return {"gens": [int(g) for g in P.gens], "gens_words": [format_pair(G.word_of(g)) for g in P.gens],
            "m": P.m,
            "labels": [P.partition.classify(x) for x in G.elements()]}


def pair_from_document(G: FiniteGroup, doc: dict) -> ConfigurationPair:
    gens = tuple(G.parse_element(g) for g in doc["gens"])
    labels = list(doc["labels"])
    if len(labels) != G.order:
        raise ValueError("one label per element required")
    return ConfigurationPair(G, gens, _labelled(G, labels, int(doc.get("m", max(labels)))))


def _group_block(G: FiniteGroup) -> dict:
    return {"fingerprint": G.fingerprint(), "document": G.to_document()}


def _require_finite(*groups) -> None:
    for X in groups:
        if not isinstance(X, FiniteGroup):
            raise TypeError("equivalence search needs finite groups given by tables")


def match_pair(P_G: ConfigurationPair, H: FiniteGroup, bounds: SearchBounds = SearchBounds(),
               mode: str = ONE_SIDED, jobs: int = 1) -> Verdict:
    """Search H for a pair with the same configuration set as P_G."""
    mode = normalize_mode(mode)
    G = P_G.group
    _require_finite(G, H)
    configs, used = _compress(P_G, mode)
    k, n = len(used), P_G.n
    stats = {"n": n, "k": k}
    try:
        reps, full = tuple_classes(H, n, bounds.max_word_len)
        n_parts = stirling2(H.order, k)
        stats.update(tuples=len(reps), partitions=n_parts, exhaustive=full)
        if len(reps) * n_parts > bounds.max_candidates:
            raise SearchCapExceeded("cap")
    except SearchCapExceeded:
        return Verdict(INCONCLUSIVE, mode, bounds, None, stats)
    space = KeySpace(k, len(configs[0]))
    target = space.key_of_configs(configs)
    parts = rgs_array(H.order, k)
    base = {"groups": {"G": _group_block(G), "H": _group_block(H)}, "mode": mode,
            "pair_G": pair_document(P_G), "configs_G": [list(c) for c in configuration_set(P_G, mode).configs]}
    for t in reps:
        found = _tuple_keys(H, t, parts, space, mode)
        if target in found:
            P_H = _align(P_G, H, t, parts[found[target]], mode)
            cert = dict(base, kind="match", pair_H=pair_document(P_H),
                        configs_H=[list(c) for c in configuration_set(P_H, mode).configs])
            return Verdict(MATCHED, mode, bounds, cert, stats)
    if not full:
        return Verdict(INCONCLUSIVE, mode, bounds, None, stats)
    cert = dict(base, kind="no_match", witness="G", search={"n": n, "k": k, "tuples": len(reps),
                                                            "partitions": n_parts})
    return Verdict(DISTINGUISHED, mode, bounds, cert, stats)


def equivalent_finite(G: FiniteGroup, H: FiniteGroup, bounds: SearchBounds = SearchBounds(),
                      mode: str = ONE_SIDED, jobs: int = 1) -> Verdict:
    """Compare K(G; n, k) and K(H; n, k) for n <= max_gens and k <= max_blocks.

    Small (n, k) are tried first, so a distinguishing pair is as short as
    the bounds allow.
    """
    mode = normalize_mode(mode)
    _require_finite(G, H)
    stats: dict = {"levels": []}
    if max(G.order, H.order) > bounds.max_order:
        stats["reason"] = f"order above max_order={bounds.max_order}"
        return Verdict(INCONCLUSIVE, mode, bounds, None, stats)
    groups = {"G": _group_block(G), "H": _group_block(H)}
    digests = []
    samples = []
    for n in range(1, bounds.max_gens + 1):
        for k in range(1, bounds.max_blocks + 1):
            try:
                KG = key_set(G, n, k, mode, bounds, jobs)
                KH = key_set(H, n, k, mode, bounds, jobs)
            except SearchCapExceeded as exc:
                stats["reason"] = str(exc)
                return Verdict(INCONCLUSIVE, mode, bounds, None, stats)
            stats["levels"].append({"n": n, "k": k, "keys_G": len(KG.keys), "keys_H": len(KH.keys),
                                    "tuples_G": KG.tuples, "tuples_H": KH.tuples,
                                    "partitions_G": KG.partitions, "partitions_H": KH.partitions})
            for side, A, B, X in (("G", KG, KH, G), ("H", KH, KG, H)):
                missing = sorted(set(A.keys) - set(B.keys))
                if missing and B.exhaustive:
                    t, i = A.keys[missing[0]]
                    P = _pair_from(X, t, rgs_array(X.order, k)[i])
                    cert = {"kind": "distinguished", "groups": groups, "mode": mode, "witness": side,
                            "pair": pair_document(P),
                            "configs": [list(c) for c in configuration_set(P, mode).configs],
                            "search": {"n": n, "k": k, "tuples": B.tuples, "partitions": B.partitions}}
                    return Verdict(DISTINGUISHED, mode, bounds, cert, stats)
                if missing:
                    stats["reason"] = "unmatched key against a non-exhaustive tuple search"
                    return Verdict(INCONCLUSIVE, mode, bounds, None, stats)
            digests.append({"n": n, "k": k, "G": KG.digest(), "H": KH.digest(), "keys": len(KG.keys)})
            if KG.keys:
                key = min(KG.keys)
                tg, ig = KG.keys[key]
                th, ih = KH.keys[key]
                PG = _pair_from(G, tg, rgs_array(G.order, k)[ig])
                PH = _align(PG, H, th, rgs_array(H.order, k)[ih], mode)
                samples.append({"pair_G": pair_document(PG), "pair_H": pair_document(PH)})
    cert = {"kind": "equivalent", "groups": groups, "mode": mode, "digests": digests, "samples": samples}
    return Verdict(MATCHED, mode, bounds, cert, stats)


# -- replay ---------------------------------------------------------------------------------------

def _groups_of(cert: dict, G=None, H=None):
    out = []
    for side, given in (("G", G), ("H", H)):
        blk = cert["groups"][side]
        X = group_from_document(blk["document"])
        if X.fingerprint() != blk["fingerprint"]:
            return None
        if given is not None and given.fingerprint() != blk["fingerprint"]:
            return None
        out.append(X)
    return out


def _configs_equal(P: ConfigurationPair, mode: str, stored) -> bool:
    return configuration_set(P, mode).configs == tuple(tuple(c) for c in stored)


def replay_certificate(V: Verdict | dict, G: FiniteGroup | None = None, H: FiniteGroup | None = None) -> bool:
    """Recompute a certificate's claims from scratch.

    Stored configuration sets are recomputed with the scalar engine.  A
    negative claim (no pair in the other group) is re-searched.  Supplying
    G or H also checks that the certificate was made for those groups.
    """
    if isinstance(V, dict):
        V = Verdict.from_document(V)
    cert = V.certificate
    if cert is None:
        raise ValueError("verdict carries no certificate")
    try:
        groups = _groups_of(cert, G, H)
        if groups is None:
            return False
        G, H = groups
        mode = cert["mode"]
        kind = cert["kind"]
        if kind == "match":
            PG, PH = pair_from_document(G, cert["pair_G"]), pair_from_document(H, cert["pair_H"])
            return (V.status == MATCHED and _configs_equal(PG, mode, cert["configs_G"])
                    and _configs_equal(PH, mode, cert["configs_H"])
                    and configuration_set(PG, mode).configs == configuration_set(PH, mode).configs)
        if kind == "no_match":
            PG = pair_from_document(G, cert["pair_G"])
            if V.status != DISTINGUISHED or not _configs_equal(PG, mode, cert["configs_G"]):
                return False
            again = match_pair(PG, H, SearchBounds(max_candidates=10 ** 12), mode)
            return again.status == DISTINGUISHED
        if kind == "distinguished":
            X, Y = (G, H) if cert["witness"] == "G" else (H, G)
            P = pair_from_document(X, cert["pair"])
            if V.status != DISTINGUISHED or not _configs_equal(P, mode, cert["configs"]):
                return False
            if P.n != cert["search"]["n"]:
                return False
            again = match_pair(P, Y, SearchBounds(max_candidates=10 ** 12), mode)
            return again.status == DISTINGUISHED
        if kind == "equivalent":
            if V.status != MATCHED:
                return False
            for s in cert["samples"]:
                PG, PH = pair_from_document(G, s["pair_G"]), pair_from_document(H, s["pair_H"])
                if configuration_set(PG, mode).configs != configuration_set(PH, mode).configs:
                    return False
            for d in cert["digests"]:
                b = SearchBounds(max_word_len=V.bounds.max_word_len, max_candidates=10 ** 12)
                if (key_set(G, d["n"], d["k"], mode, b).digest() != d["G"]
                        or key_set(H, d["n"], d["k"], mode, b).digest() != d["H"]
                        or d["G"] != d["H"]):
                    return False
            return True
    except (KeyError, ValueError, TypeError, IndexError):
        return False
    return False


def save_certificate(V: Verdict, path) -> None:
    with open(path, "w") as fh:
        json.dump(V.to_document(), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_certificate(path) -> Verdict:
    with open(path) as fh:
        return Verdict.from_document(json.load(fh))
