"""Small named groups used by the tests, the self-test and the scripts."""
from __future__ import annotations

from .groups import (DirectProduct, FiniteGroup, FreeProduct, PolycyclicGroup, cyclic,
                     finite_direct_product, from_permutations)


def trivial() -> FiniteGroup:
    return FiniteGroup([[0]], [0])


def symmetric3() -> FiniteGroup:
    """S3 from a transposition and a 3-cycle."""
    return from_permutations([(1, 0, 2), (1, 2, 0)])


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon (order 2n) from a rotation and a reflection."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return from_permutations([rot, ref])


def klein() -> FiniteGroup:
    return finite_direct_product(cyclic(2), cyclic(2))


def integers() -> PolycyclicGroup:
    return PolycyclicGroup(1)


def free_abelian(k: int) -> PolycyclicGroup:
    return PolycyclicGroup(k)


def infinite_dihedral() -> PolycyclicGroup:
    """<a1, a2 | a1^2 = e, a1^-1 a2 a1 = a2^-1>"""
    return PolycyclicGroup(2, relative_orders={0: 2}, power_relations={0: (0, 0)},
                           conjugations={(0, 1): (0, -1)})


def heisenberg() -> PolycyclicGroup:
    """<a1, a2, a3 | [a1, a2] = a3 central>, i.e. a1^-1 a2 a1 = a2 a3^-1."""
    return PolycyclicGroup(3, conjugations={(0, 1): (0, 1, -1)})


def z_cross_finite(n: int) -> PolycyclicGroup:
    """Z x Z_n as a polycyclic presentation with a_2 of relative order n."""
    return PolycyclicGroup(2, relative_orders={1: n}, power_relations={1: (0, 0)})


def cyclic_as_polycyclic(n: int) -> PolycyclicGroup:
    return PolycyclicGroup(1, relative_orders={0: n}, power_relations={0: (0,)})


def z2_free_z2() -> FreeProduct:
    return FreeProduct([cyclic(2), cyclic(2)])


def z2_free_z3() -> FreeProduct:
    return FreeProduct([cyclic(2), cyclic(3)])


def z_plus_z2() -> DirectProduct:
    return DirectProduct([integers(), cyclic(2)])


def z4_cross_z2() -> FiniteGroup:
    return finite_direct_product(cyclic(4), cyclic(2))


FINITE = {
    "Z2": lambda: cyclic(2),
    "Z4": lambda: cyclic(4),
    "S3": symmetric3,
}

INFINITE = {
    "Z": integers,
    "Dinf": infinite_dihedral,
    "H3": heisenberg,
}


def isomorphic_presentations() -> list[tuple[str, FiniteGroup, FiniteGroup]]:
    """Pairs of different tables of the same group of order <= 12."""
    return [
        ("Z2x2", klein(), from_permutations([(1, 0, 3, 2), (2, 3, 0, 1)])),
        ("Z6", cyclic(6), finite_direct_product(cyclic(2), cyclic(3))),
        ("S3", symmetric3(), dihedral(3)),
        ("D4", dihedral(4), from_permutations([(1, 2, 3, 0), (3, 2, 1, 0)])),
        ("Z12", cyclic(12), finite_direct_product(cyclic(4), cyclic(3))),
    ]


def z_cross_s3_series():
    """Z x S3 with the series G > Z x A3 > {e}; factors Z2 and Z + Z3."""
    from .golden import (SeriesLevel, SubnormalSeries, direct_product_golden,
                         finite_golden_system, polycyclic_golden_system)
    from .groups import closure
    Z, S3 = integers(), symmetric3()
    G = DirectProduct([Z, S3])
    A3 = closure(S3, [S3.mul(x, x) for x in S3.elements()])
    r = min(x for x in A3 if x != S3.identity)
    power = {S3.power(r, k): k for k in range(3)}
    t = min(x for x in S3.elements() if x not in A3)

    Z2 = cyclic(2)
    top = finite_golden_system(Z2)
    top_lifts = tuple((Z.identity, S3.identity if y == 0 else t) for y in top.gens)
    level0 = SeriesLevel(contains=lambda g: True,
                         quotient=lambda g: 0 if g[1] in A3 else 1,
                         system=top, lifts=top_lifts)

    low = direct_product_golden([polycyclic_golden_system(Z), finite_golden_system(cyclic(3))])
    low_lifts = tuple((z, S3.power(r, k)) for z, k in low.gens)
    level1 = SeriesLevel(contains=lambda g: g[1] in A3,
                         quotient=lambda g: (g[0], power[g[1]]),
                         system=low, lifts=low_lifts)
    return SubnormalSeries(G, (level0, level1))
