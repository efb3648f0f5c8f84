"""Acceptance criteria 1-10.

Each test prints one ``criterion N: PASS|FAIL`` line (collected again in the
terminal summary) and asserts both the property and its time budget.
Run standalone with ``python3 tests/test_acceptance.py``.
"""
import itertools
import random
import time

import pytest

from configeq import fixtures as F
from configeq.configs import (ONE_SIDED, TWO_SIDED, ConfigurationPair, block_stabilizer,
                              check_translation_invariance, configuration_set,
                              is_normal_subgroup, normal_subset_check, project_two_sided)
from configeq.equivalence import (DISTINGUISHED, MATCHED, equivalent_finite, replay_certificate,
                                  rgs_array)
from configeq.golden import (QuotientMap, direct_product_golden, finite_golden_system,
                             free_product_golden, polycyclic_facts, polycyclic_golden_system,
                             polynomial_type_golden, verify_axioms, verify_golden_property)
from configeq.groups import ball, cyclic
from configeq.partitions import from_labels, sigma_partition, signature, signature_range
from configeq.words import EMPTY, RepresentativePair, concat, enumerate_pairs, evaluate, invert

from oracles import naive_configurations

RESULTS: list[str] = []


def report(n: int, ok: bool, elapsed: float, budget: float, detail: str = "") -> None:
    passed = ok and elapsed < budget
    line = f"criterion {n}: {'PASS' if passed else 'FAIL'} ({elapsed:.2f}s of {budget:.0f}s) {detail}".rstrip()
    RESULTS.append(line)
    print(line)
    assert ok, line
    assert elapsed < budget, line


def labelled(G, labels):
    return from_labels(G, [int(v) + 1 for v in labels])


def sign_pair(G):
    return ConfigurationPair(G, G.generators,
                             sigma_partition(lambda x: signature(G, x), signature_range(G)), check=False)


# ---------------------------------------------------------------------------------------------

def test_criterion_1_word_calculus():
    t = time.perf_counter()
    groups = {"Z2": cyclic(2), "Z4": cyclic(4), "S3": F.symmetric3(), "Z": F.integers(),
              "Dinf": F.infinite_dihedral(), "H3": F.heisenberg()}
    checked, bad = 0, []
    for name, G in groups.items():
        gens = G.generators
        for p in itertools.chain([EMPTY], enumerate_pairs(len(gens), 4)):
            value = evaluate(p, gens, G)
            if evaluate(invert(p), gens, G) != G.inv(value):
                bad.append((name, p, "invert"))
            # every split p = p1 + p2 covers all concatenations of total length <= 4
            for i in range(len(p) + 1):
                p1 = RepresentativePair(p.J[:i], p.rho[:i])
                p2 = RepresentativePair(p.J[i:], p.rho[i:])
                checked += 1
                if concat(p1, p2) != p or G.mul(evaluate(p1, gens, G), evaluate(p2, gens, G)) != value:
                    bad.append((name, p, i))
    report(1, not bad, time.perf_counter() - t, 5, f"{checked} splits, {len(bad)} violations")


def test_criterion_2_configuration_oracle():
    t = time.perf_counter()
    checked, bad = 0, []
    for G in (cyclic(2), cyclic(4), F.symmetric3()):
        tuples = [G.generators] + ([(3,)] if G.order == 4 else [])
        for gens in tuples:
            for k in range(1, 4):
                for lab in rgs_array(G.order, k):
                    P = ConfigurationPair(G, gens, labelled(G, lab))
                    for mode in (ONE_SIDED, TWO_SIDED):
                        ref = naive_configurations(G.elements(), G.mul, gens, P.partition.classify,
                                                   mode == TWO_SIDED, P.m)
                        checked += 1
                        if set(configuration_set(P, mode).configs) != ref:
                            bad.append((G, gens, tuple(lab), mode))
    report(2, not bad, time.perf_counter() - t, 30, f"{checked} (pair, mode) cases, {len(bad)} mismatches")


def test_criterion_3_translation_invariance():
    t = time.perf_counter()
    rng = random.Random(3)
    fixtures = [cyclic(2), cyclic(4), F.symmetric3(), F.klein(), F.dihedral(4), F.z4_cross_z2()]
    checked, bad = 0, 0
    for G in fixtures:
        for _ in range(20):
            k = rng.randint(1, min(4, G.order))
            parts = rgs_array(G.order, k)
            P = ConfigurationPair(G, G.generators, labelled(G, parts[rng.randrange(len(parts))]))
            for g in G.elements():
                for mode in (ONE_SIDED,):
                    checked += 1
                    bad += not check_translation_invariance(P, g, mode)
    report(3, bad == 0, time.perf_counter() - t, 30, f"{checked} translations, {bad} violations")


def test_criterion_4_two_sided_projection():
    t = time.perf_counter()
    rng = random.Random(4)
    cases = []
    for G in (cyclic(2), cyclic(4), F.symmetric3()):
        for k in range(1, 4):
            for lab in rgs_array(G.order, k)[:10]:
                cases.append((ConfigurationPair(G, G.generators, labelled(G, lab)), None))
    for make in (F.integers, F.infinite_dihedral, F.heisenberg):
        cases.append((sign_pair(make()), 5))
    Dinf = F.infinite_dihedral()
    for _ in range(5):
        table = {v: rng.randint(1, 3) for v in signature_range(Dinf)}
        P = sigma_partition(lambda x: table[signature(Dinf, x)], (1, 2, 3))
        cases.append((ConfigurationPair(Dinf, Dinf.generators, P, check=False), 5))
    bad = 0
    for P, r in cases:
        T = configuration_set(P, TWO_SIDED, r)
        C = configuration_set(P, ONE_SIDED, r)
        bad += project_two_sided(T).configs != C.configs or T.carrier_size != C.carrier_size
    report(4, bad == 0, time.perf_counter() - t, 10, f"{len(cases)} pairs, {bad} violations")


def _asymmetric(T, n):
    return [c for c in T.configs if c[1:n + 1] != c[n + 1:]]


def test_criterion_5_abelian_symmetry():
    t = time.perf_counter()
    abelian = [sign_pair(F.integers()), sign_pair(F.free_abelian(2))]
    Z4x2 = F.z4_cross_z2()
    for k in range(1, 4):
        for lab in rgs_array(Z4x2.order, k)[::97]:
            abelian.append(ConfigurationPair(Z4x2, Z4x2.generators, labelled(Z4x2, lab)))
    abelian_bad = sum(len(_asymmetric(configuration_set(P, TWO_SIDED, 5), P.n)) for P in abelian)
    S3 = F.symmetric3()
    s3_bad = 0
    for lab in rgs_array(6, 2):
        P = ConfigurationPair(S3, S3.generators, labelled(S3, lab))
        s3_bad += len(_asymmetric(configuration_set(P, TWO_SIDED), P.n))
    report(5, abelian_bad == 0 and s3_bad >= 1, time.perf_counter() - t, 10,
           f"abelian violations {abelian_bad} over {len(abelian)} pairs; S3 violations {s3_bad}")


def test_criterion_6_polycyclic_facts():
    t = time.perf_counter()
    reps = {name: polycyclic_facts(make(), 5) for name, make in
            (("Dinf", F.infinite_dihedral), ("H3", F.heisenberg))}
    bad = sum(len(v) for r in reps.values() for v in r.violations.values())
    counts = {name: sum(r.checked.values()) for name, r in reps.items()}
    report(6, bad == 0, time.perf_counter() - t, 60, f"identities checked {counts}, {bad} violations")


def criterion_7_systems():
    Z6, Z3 = cyclic(6), cyclic(3)
    z2, z3 = finite_golden_system(cyclic(2)), finite_golden_system(Z3)
    return {
        "Z6/{0,3}": finite_golden_system(Z6, QuotientMap.from_images(Z6, Z3, [1])),
        "Dinf": polycyclic_golden_system(F.infinite_dihedral()),
        "H3": polycyclic_golden_system(F.heisenberg()),
        "Z2*Z3": free_product_golden([z2, z3]),
        "Z+Z2": direct_product_golden([polycyclic_golden_system(F.integers()), z2]),
        "xy^3+2x^2y": polynomial_type_golden("xy^3+2x^2y", {"x": z2, "y": z3}),
    }


def test_criterion_7_golden_axioms():
    t = time.perf_counter()
    reps = {name: verify_axioms(s, 4) for name, s in criterion_7_systems().items()}
    bad = {n: len(r.word_violations) + len(r.kernel_violations) for n, r in reps.items()}
    sizes = {n: r.checked for n, r in reps.items()}
    report(7, not any(bad.values()), time.perf_counter() - t, 120,
           f"elements checked {sizes}, violations {sum(bad.values())}")


def test_criterion_8_golden_self_consistency():
    t = time.perf_counter()
    failures, flagged = [], []
    for name, s in criterion_7_systems().items():
        radius = 4
        own = s.config_pair()
        rep = verify_golden_property(s, own, radius)
        if not (rep.gate_passed and rep.ok):
            failures.append(name)
        # negative control: a non-identity coset gets the word of a different coset
        G, Q = s.group, s.target
        y = next(s.quotient(x) for x in ball(G, 1) if s.quotient(x) != Q.identity)
        wrong = next(RepresentativePair((j,), (1,)) for j in range(1, len(s.gens) + 1)
                     if s.quotient(s.gens[j - 1]) not in (y, Q.identity))
        neg = verify_golden_property(s.with_pair_override(y, wrong), own, radius)
        flagged.append(neg.gate_passed and not neg.ok)
    report(8, not failures and all(flagged), time.perf_counter() - t, 60,
           f"self-consistency failures {failures}; negative controls flagged {sum(flagged)}/{len(flagged)}")


def test_criterion_9_equivalence_harness():
    t = time.perf_counter()
    lines, ok = [], True
    for name, G, H in (("Z4 vs Z2xZ2", cyclic(4), F.klein()), ("Z6 vs S3", cyclic(6), F.symmetric3())):
        for mode in ("con", "tcon"):
            v = equivalent_finite(G, H, mode=mode)
            good = v.status == DISTINGUISHED and replay_certificate(v)
            ok &= good
            lines.append(f"{name}/{mode}={v.status}{'' if good else '!'}")
    for name, G, H in F.isomorphic_presentations():
        v = equivalent_finite(G, H)
        good = v.status == MATCHED and replay_certificate(v)
        ok &= good
        lines.append(f"{name}={v.status}{'' if good else '!'}")
    report(9, ok, time.perf_counter() - t, 600, "; ".join(lines))


def test_criterion_10_block_stabilizers():
    t = time.perf_counter()
    rng = random.Random(10)
    groups = [cyclic(6), cyclic(8), F.symmetric3(), F.dihedral(4), F.klein(), F.z4_cross_z2(),
              F.dihedral(5)]
    subgroup_fail, normal_fail, normal_seen = 0, 0, 0
    for i in range(100):
        G = groups[i % len(groups)]
        if i % 4 == 0:  # bias some samples towards unions of conjugacy classes
            seeds = rng.sample(G.elements(), rng.randint(1, 2))
            M = {G.conj(s, g) for s in seeds for g in G.elements()}
        else:
            M = set(rng.sample(G.elements(), rng.randint(1, G.order)))
        try:
            S = block_stabilizer(G, M)
        except AssertionError:
            subgroup_fail += 1
            continue
        closed = G.identity in S and all(G.mul(a, b) in S and G.inv(a) in S for a in S for b in S)
        subgroup_fail += not closed
        if normal_subset_check(G, M):
            normal_seen += 1
            normal_fail += not is_normal_subgroup(G, S)
    report(10, subgroup_fail == 0 and normal_fail == 0, time.perf_counter() - t, 10,
           f"100 subsets, {normal_seen} normal; subgroup failures {subgroup_fail}, normality failures {normal_fail}")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
