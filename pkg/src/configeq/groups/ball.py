from __future__ import annotations

from typing import Sequence

from ..words import RepresentativePair
from .base import Group

DEFAULT_RADIUS = 6
DEFAULT_CAP = 200_000


class BallCapExceeded(RuntimeError):
    """Ball enumeration hit the element cap; retry with a smaller radius."""

    def __init__(self, radius: int, cap: int):
        super().__init__(f"ball of radius {radius} exceeds {cap} elements")
        self.radius = radius
        self.cap = cap


def ball(G: Group, radius: int = DEFAULT_RADIUS, gens: Sequence | None = None,
         cap: int = DEFAULT_CAP) -> dict:
    """Elements of word length <= radius over gens and their inverses.

    Returns an insertion-ordered dict element -> shortest witness word.  The
    search is breadth first with letters tried in the order (1,+1), (1,-1),
    (2,+1), ... and words extended on the right, so both the order and the
    witnesses are deterministic.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    gens = tuple(G.generators if gens is None else gens)
    letters = []
    for j, g in enumerate(gens, start=1):
        letters.append((j, 1, g))
        letters.append((j, -1, G.inv(g)))
    found = {G.identity: RepresentativePair((), ())}
    frontier = [G.identity]
    for _ in range(radius):
        nxt = []
        for x in frontier:
            w = found[x]
            for j, r, g in letters:
                y = G.mul(x, g)
                if y not in found:
                    found[y] = RepresentativePair(w.J + (j,), w.rho + (r,))
                    nxt.append(y)
                    if len(found) > cap:
                        raise BallCapExceeded(radius, cap)
        if not nxt:
            break
        frontier = nxt
    return found


def sphere_sizes(G: Group, radius: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Number of elements at exact word length 0..radius."""
    sizes = [0] * (radius + 1)
    for w in ball(G, radius, cap=cap).values():
        sizes[len(w)] += 1
    return sizes
