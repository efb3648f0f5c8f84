"""Representative pairs (J, rho) and the words they name.

A representative pair is a formal word in an ordered tuple of group
elements: ``J`` holds 1-based positions into the tuple and ``rho`` the
matching exponents (+1 or -1).  Pairs are never reduced; reduction only
happens when a pair is evaluated in a concrete group.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class RepresentativePair:
    J: tuple[int, ...]
    rho: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "J", tuple(int(j) for j in self.J))
        object.__setattr__(self, "rho", tuple(int(r) for r in self.rho))
        if len(self.J) != len(self.rho):
            raise ValueError(f"component counts differ: {len(self.J)} != {len(self.rho)}")
        if any(j < 1 for j in self.J):
            raise ValueError(f"indices are 1-based, got {self.J}")
        if any(r not in (1, -1) for r in self.rho):
            raise ValueError(f"signs must be +1/-1, got {self.rho}")

    def __len__(self) -> int:
        return len(self.J)

    def __str__(self) -> str:
        return format_pair(self)

    def letters(self) -> Iterator[tuple[int, int]]:
        return zip(self.J, self.rho)

    def check_range(self, n: int) -> None:
        if any(j > n for j in self.J):
            raise IndexError(f"pair {format_pair(self)} indexes past {n} generators")

    def shifted(self, offset: int) -> "RepresentativePair":
        """Same word with every index moved by ``offset`` (lifting into a concatenated tuple)."""
        return RepresentativePair(tuple(j + offset for j in self.J), self.rho)


EMPTY = RepresentativePair((), ())


def pair(J: Sequence[int], rho: Sequence[int] | None = None) -> RepresentativePair:
    """Shorthand constructor; ``rho`` defaults to all +1."""
    if rho is None:
        rho = (1,) * len(J)
    return RepresentativePair(tuple(J), tuple(rho))


def evaluate(p: RepresentativePair, elements: Sequence, G):
    """Return prod elements[J(i)]**rho(i) in G's normal form.

    ``elements`` need not generate G.
    """
    p.check_range(len(elements))
    invs = {}
    result = G.identity
    for j, r in p.letters():
        x = elements[j - 1]
        if r < 0:
            if j not in invs:
                invs[j] = G.inv(x)
            x = invs[j]
        result = G.mul(result, x)
    return result


def concat(*pairs: RepresentativePair) -> RepresentativePair:
    """J1 (+) J2, rho1 (+) rho2."""
    J: tuple[int, ...] = ()
    rho: tuple[int, ...] = ()
    for p in pairs:
        J += p.J
        rho += p.rho
    return RepresentativePair(J, rho)


def invert(p: RepresentativePair) -> RepresentativePair:
    """J reversed, rho reversed and negated, so the word evaluates to the inverse."""
    return RepresentativePair(p.J[::-1], tuple(-r for r in reversed(p.rho)))


def enumerate_pairs(n: int, max_len: int) -> Iterator[RepresentativePair]:
    """All pairs of length 1..max_len over n generators in length-lexicographic order.

    Within a length, letters are ordered (1,+1) < (1,-1) < (2,+1) < ...
    The empty pair is never produced.
    """
    if n < 1:
        raise ValueError("need at least one generator")
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    letters = [(j, r) for j in range(1, n + 1) for r in (1, -1)]
    for length in range(1, max_len + 1):
        for word in itertools.product(letters, repeat=length):
            yield RepresentativePair(tuple(j for j, _ in word), tuple(r for _, r in word))


def count_pairs(n: int, max_len: int) -> int:
    return sum((2 * n) ** k for k in range(1, max_len + 1))


_TOKEN = re.compile(r"^(\d+)(?:\^(-?1))?$")


def parse_pair(text: str) -> RepresentativePair:
    """Parse the token form ``"1 2^-1 1"``; ``"e"`` or an empty string is the empty pair."""
    text = text.strip()
    if text in ("", "e"):
        return EMPTY
    J, rho = [], []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        J.append(int(m.group(1)))
        rho.append(int(m.group(2) or 1))
    return RepresentativePair(tuple(J), tuple(rho))


def format_pair(p: RepresentativePair) -> str:
    if not p.J:
        return "e"
    return " ".join(str(j) if r > 0 else f"{j}^-1" for j, r in p.letters())
