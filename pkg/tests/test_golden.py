import pytest
from hypothesis import given, strategies as st

from configeq import fixtures as F
from configeq import golden
from configeq.configs import ConfigurationPair
from configeq.golden import (GoldenSystemError, QuotientMap, SeriesLevel, SubnormalSeries,
                             direct_product_golden, finite_golden_system, finite_series,
                             free_product_golden, golden_pair_from_system, parse_polynomial,
                             polycyclic_facts, polycyclic_golden_system, polynomial_shape,
                             polynomial_type_golden, refine_for_relators, subnormal_series_golden,
                             verify_axioms, verify_golden_property)
from configeq.groups import ball, cyclic, from_permutations
from configeq.partitions import from_labels, is_refinement
from configeq.words import RepresentativePair, evaluate, pair


def z6_mod_3():
    Z6, Z3 = cyclic(6), cyclic(3)
    return finite_golden_system(Z6, QuotientMap.from_images(Z6, Z3, [1]))


def fin(n):
    return finite_golden_system(cyclic(n))


# -- quotient maps -----------------------------------------------------------------------------

def test_quotient_map_check():
    Z6 = cyclic(6)
    assert QuotientMap.from_images(Z6, cyclic(3), [1]).check() == []
    assert QuotientMap.from_images(Z6, cyclic(4), [1]).check()  # not a homomorphism
    assert QuotientMap.from_images(Z6, cyclic(3), [0]).check()  # not onto
    with pytest.raises(ValueError):
        QuotientMap.from_images(Z6, cyclic(3), [1, 2])


# -- finite quotients --------------------------------------------------------------------------------

def test_trivial_quotient_single_block():
    G = F.symmetric3()
    s = finite_golden_system(G, QuotientMap.from_images(G, F.trivial(), [0, 0]))
    assert len(s.sigma_range) == 1
    assert s.partition().m == 1


def test_z6_mod_subgroup_of_order_two():
    s = z6_mod_3()
    assert len(s.sigma_range) == 3
    assert s.gens[0] == 0  # identity prepended
    P = s.partition()
    assert P.block(s.sigma_range.index(s.identity_value) + 1) == frozenset({0, 3})
    assert sorted(map(sorted, P.blocks)) == [[0, 3], [1, 4], [2, 5]]
    assert verify_axioms(s).ok


def test_s3_mod_a3():
    G = F.symmetric3()
    A3 = [x for x in G.elements() if G.mul(G.mul(x, x), x) == G.identity]
    Q = cyclic(2)
    q = QuotientMap(G, Q, (), func=lambda x: 0 if x in A3 else 1)
    s = finite_golden_system(G, q)
    assert len(s.sigma_range) == 2
    assert s.partition().block(1) == frozenset(A3)


def test_pairs_use_smallest_index():
    s = z6_mod_3()
    for y in range(3):
        p = s.pair_of(y)
        i = p.J[0]
        assert p.rho == (1,) and s.quotient(s.gens[i - 1]) == y
        assert all(s.quotient(s.gens[j]) != y for j in range(i - 1))


def test_augmentation_disabled():
    Z6 = cyclic(6)
    with pytest.raises(GoldenSystemError):
        finite_golden_system(Z6, QuotientMap.from_images(Z6, cyclic(3), [1]), augment=False)


# -- polycyclic ---------------------------------------------------------------------------------------

def test_polycyclic_examples():
    Z = polycyclic_golden_system(F.integers())
    assert set(Z.sigma_range) == {(-1,), (0,), (1,)}
    assert Z.pair_of((5,)) == pair([1] * 5)
    D = polycyclic_golden_system(F.infinite_dihedral())
    assert len(D.sigma_range) == 6 and D.sigma((1, -3)) == (1, -1)
    H = polycyclic_golden_system(F.heisenberg())
    assert len(H.sigma_range) == 27 and H.sigma((0, 2, -1)) == (0, 1, -1)
    assert H.identity_value == (0, 0, 0)
    assert len(polycyclic_golden_system(F.z_cross_finite(4)).sigma_range) == 12


def test_dinf_pair_partition_has_six_blocks():
    P = golden_pair_from_system(polycyclic_golden_system(F.infinite_dihedral()))
    assert P.m == 6
    assert all(P.partition.blocks_on(ball(P.group, 3)))


@pytest.mark.parametrize("make", [F.integers, F.infinite_dihedral, F.heisenberg,
                                  lambda: F.z_cross_finite(3), lambda: F.cyclic_as_polycyclic(5)])
def test_polycyclic_facts(make):
    rep = polycyclic_facts(make(), 4)
    assert rep.ok, rep.violations


def test_facts_detect_a_wrong_classifier(monkeypatch):
    # dropping the sign of a2 merges blocks and breaks identity (iv)/(v)
    monkeypatch.setattr(golden, "signature", lambda G, x: (x[0],) + tuple(abs(v) > 0 for v in x[1:]))
    assert not polycyclic_facts(F.infinite_dihedral(), 3).ok


# -- products -------------------------------------------------------------------------------------------

def test_single_factor_reduces():
    s = fin(3)
    assert free_product_golden([s]) is s
    assert direct_product_golden([s]) is s
    assert polynomial_type_golden("x", {"x": s}) is s


def test_free_product_first_letter():
    a, b = fin(2), fin(2)
    s = free_product_golden([a, b])
    G = s.group
    x, y = G.letter(0, 1), G.letter(1, 1)
    xyx = G.mul(x, G.mul(y, x))
    assert s.sigma(xyx) == (1, a.sigma(1))
    assert s.sigma(()) == 0
    assert len(s.sigma_range) == 1 + 1 + 1


def test_free_product_z_z2():
    z, t = polycyclic_golden_system(F.integers()), fin(2)
    s = free_product_golden([z, t])
    G = s.group
    w = G.mul(G.letter(0, (-3,)), G.mul(G.letter(1, 1), G.letter(0, (5,))))
    assert s.sigma(w) == (1, (-1,))
    assert evaluate(s.pair_of(w), s.gens, G) == w


def test_free_product_range_cardinality():
    parts = [fin(2), fin(3), polycyclic_golden_system(F.integers())]
    s = free_product_golden(parts)
    assert len(s.sigma_range) == 1 + sum(len(p.sigma_range) - 1 for p in parts)


def test_direct_products():
    zz = direct_product_golden([polycyclic_golden_system(F.integers())] * 2)
    assert len(zz.sigma_range) == 9
    t = fin(2)
    zt = direct_product_golden([polycyclic_golden_system(F.integers()), t])
    assert zt.sigma(((-4,), 1)) == ((-1,), t.sigma(1))
    trivial = finite_golden_system(F.trivial())
    s = direct_product_golden([trivial, fin(3)])
    assert len(s.sigma_range) == 3 and all(v[0] == trivial.identity_value for v in s.sigma_range)


# -- polynomial type ------------------------------------------------------------------------------------

def test_parse_polynomial():
    assert parse_polynomial("xy^3+2x^2y", "xy") == [(1, list("xyyy")), (2, list("xxy"))]
    assert parse_polynomial("x*y^3 + 2*x^2*y", "xy") == parse_polynomial("xy^3+2x^2y", "xy")
    assert polynomial_shape("xy^3+2x^2y", {"x": "G", "y": "H"}) == "(G*H*H*H)+(G*G*H)+(G*G*H)"
    for bad in ("x+1", "x+", "0x", "xz", "x^", "x^0", "2^x"):
        with pytest.raises(ValueError):
            parse_polynomial(bad, "xy")


def test_polynomial_groups():
    s = polynomial_type_golden("xy", {"x": fin(2), "y": fin(3)})
    assert s.kind == "free_product" and len(s.group.factors) == 2
    big = polynomial_type_golden("xy^3+2x^2y", {"x": fin(2), "y": fin(3)})
    assert big.kind == "direct_product"
    assert [len(f.factors) for f in big.group.factors] == [4, 3, 3]
    # 1 + 1 + 3*2 values for Z2*Z3^3 and 1 + 2*1 + 2 for Z2*Z2*Z3
    assert len(big.sigma_range) == 8 * 5 * 5


# -- subnormal series -----------------------------------------------------------------------------------

def test_series_of_length_one():
    G = F.symmetric3()
    s = finite_golden_system(G)
    S = SubnormalSeries(G, (SeriesLevel(lambda g: True, lambda g: g, s, s.gens),))
    assert subnormal_series_golden(S) is s


def test_z6_series():
    Z6 = cyclic(6)
    S = finite_series(Z6, [[0, 3]])
    s = subnormal_series_golden(S)
    for g in Z6.elements():
        steps = S.peel(g)
        assert [d for d, _, _ in steps] == sorted({d for d, _, _ in steps})
        assert evaluate(s.pair_of(g), s.gens, Z6) == g
    assert verify_axioms(s).ok


def test_z_cross_s3_series():
    s = subnormal_series_golden(F.z_cross_s3_series())
    assert verify_axioms(s, 4).ok
    assert verify_golden_property(s, s.config_pair(), 3).ok


def test_series_rejects_bad_lifts():
    G = cyclic(6)
    s = finite_golden_system(cyclic(2))
    with pytest.raises(GoldenSystemError):
        SubnormalSeries(G, (SeriesLevel(lambda g: True, lambda g: g % 2, s, (0, 2)),))


def test_series_rejects_non_normal_step():
    G = F.symmetric3()
    t = next(x for x in G.elements() if x and G.mul(x, x) == 0)
    with pytest.raises(GoldenSystemError):
        finite_series(G, [[0, t]])


# -- axioms and the golden property -----------------------------------------------------------------

SYSTEMS = {
    "Z6/N": z6_mod_3,
    "Dinf": lambda: polycyclic_golden_system(F.infinite_dihedral()),
    "H3": lambda: polycyclic_golden_system(F.heisenberg()),
    "Z2*Z3": lambda: free_product_golden([fin(2), fin(3)]),
    "Z+Z2": lambda: direct_product_golden([polycyclic_golden_system(F.integers()), fin(2)]),
    "ZxZ3": lambda: polycyclic_golden_system(F.z_cross_finite(3)),
}


@pytest.mark.parametrize("name", sorted(SYSTEMS))
def test_axioms_and_self_consistency(name):
    s = SYSTEMS[name]()
    assert verify_axioms(s, 4).ok
    rep = verify_golden_property(s, s.config_pair(), 3)
    assert rep.gate_passed and rep.ok and rep.checked > 0


@given(st.tuples(st.integers(0, 1), st.integers(-20, 20)))
def test_dinf_pairs_spell_elements(x):
    s = SYSTEMS["Dinf"]()
    assert evaluate(s.pair_of(x), s.gens, s.group) == x


@pytest.mark.parametrize("name", sorted(SYSTEMS))
def test_negative_control(name):
    s = SYSTEMS[name]()
    G, Q = s.group, s.target
    y = next(s.quotient(x) for x in ball(G, 2) if s.quotient(x) != Q.identity)
    wrong = next(p for p in (pair([1]), pair([2]), pair([1, 1]), pair([2, 2]))
                 if max(p.J) <= len(s.gens) and evaluate(p, s.quotient_gens, Q) != y)
    bad = s.with_pair_override(y, wrong)
    assert not verify_axioms(bad, 3).ok
    assert not verify_golden_property(bad, s.config_pair(), 3).ok


def test_automorphism_transport_z6():
    s = z6_mod_3()
    Z6 = s.group
    phi = {x: 5 * x % 6 for x in Z6.elements()}
    P = s.config_pair()
    Q = ConfigurationPair(Z6, tuple(phi[g] for g in P.gens),
                          from_labels(Z6, {phi[x]: P.partition.classify(x) for x in Z6.elements()}))
    assert verify_golden_property(s, Q).ok


def test_gate_failure_is_distinct():
    s = z6_mod_3()
    Z6 = s.group
    other = ConfigurationPair(Z6, s.gens, from_labels(Z6, [1, 2, 3, 3, 2, 1]))
    rep = verify_golden_property(s, other)
    assert not rep.gate_passed and not rep.inclusion_violations and "differ" in rep.note


def test_trivial_n_identity_block():
    s = finite_golden_system(F.symmetric3())
    P = s.partition()
    assert P.block(s.sigma_range.index(s.identity_value) + 1) == frozenset({0})


def test_block_count_matches_witnessed_range():
    for s in (z6_mod_3(), finite_golden_system(F.dihedral(4)), free_product_golden([fin(2), fin(3)])):
        pts = list(ball(s.group, 3)) if not s.group.is_finite else s.group.elements()
        witnessed = {s.value_of(x) for x in pts}
        nonempty = [b for b in s.partition().blocks_on(pts) if b]
        assert len(nonempty) == len(witnessed) == len(s.sigma_range)


def test_refine_for_relators():
    s = finite_golden_system(F.dihedral(4))
    R = refine_for_relators(s, [pair([1, 1, 1, 1]), pair([2, 2])])
    G = s.group
    assert is_refinement(R, s.partition(), G.elements())
    assert R.m == G.order  # every element is a word of length <= 12
    with pytest.raises(GoldenSystemError):
        refine_for_relators(SYSTEMS["Dinf"](), [pair([1, 1])])
