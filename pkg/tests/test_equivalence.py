import copy
import itertools
import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from configeq import fixtures as F
from configeq.configs import ONE_SIDED, TWO_SIDED, ConfigurationPair, configuration_set, project_two_sided
from configeq.equivalence import (DISTINGUISHED, INCONCLUSIVE, MATCHED, KeySpace, SearchBounds,
                                  Verdict, cayley_form, equivalent_finite, key_set,
                                  load_certificate, match_pair, replay_certificate, rgs_array,
                                  save_certificate, stirling2, tuple_classes)
from configeq.groups import cyclic
from configeq.partitions import from_blocks, from_labels

from oracles import brute_partitions


@pytest.mark.parametrize("N,k", [(1, 1), (4, 2), (5, 3), (6, 4), (7, 3), (3, 4)])
def test_rgs_matches_brute_force(N, k):
    rows = [tuple(int(v) for v in r) for r in rgs_array(N, k)]
    assert rows == brute_partitions(N, k)
    assert len(rows) == stirling2(N, k)


def test_stirling_values():
    assert [stirling2(4, k) for k in range(1, 5)] == [1, 7, 6, 1]
    assert stirling2(12, 3) == 86526


def test_tuple_classes_are_automorphism_orbits():
    # Z5: every non-zero element generates and Aut acts transitively on them
    reps, full = tuple_classes(cyclic(5), 1, None)
    assert reps == [(1,)] and full
    # Klein group: generating pairs are ordered bases, all one Aut-orbit (Aut = S3 acts regularly)
    reps, _ = tuple_classes(F.klein(), 2, None)
    assert len(reps) == 1
    G = F.symmetric3()
    assert cayley_form(G, G.generators) == cayley_form(G, G.generators)


def test_tuple_classes_cover_all_con_sets():
    # dedup must not lose configuration sets: compare with an undeduplicated scalar scan
    G = F.dihedral(3)
    reps, _ = tuple_classes(G, 2, None)
    space = KeySpace(2, 5)
    from configeq.equivalence import _compress
    full = set()
    for t in itertools.product(G.elements(), repeat=2):
        from configeq.groups import closure
        if len(closure(G, t)) != G.order:
            continue
        for lab in rgs_array(G.order, 2):
            P = ConfigurationPair(G, t, from_labels(G, [int(v) + 1 for v in lab]))
            configs, _ = _compress(P, TWO_SIDED)
            full.add(space.key_of_configs(configs))
    assert set(key_set(G, 2, 2, TWO_SIDED, SearchBounds()).keys) == full


def test_key_of_configs_agrees_with_vectorised_path():
    G = F.symmetric3()
    space = KeySpace(3, 3)
    from configeq.equivalence import _compress, _positions
    for lab in rgs_array(6, 3)[:40]:
        P = ConfigurationPair(G, G.generators, from_labels(G, [int(v) + 1 for v in lab]))
        configs, _ = _compress(P, ONE_SIDED)
        pos = _positions(G, G.generators, ONE_SIDED)
        assert space.key_of_configs(configs) == space.canonical(lab[None, :], pos)[0].tobytes()


def test_match_pair_examples():
    Z4 = cyclic(4)
    P = ConfigurationPair(Z4, (1,), from_blocks(Z4, [[0], [1], [2], [3]]))
    v = match_pair(P, F.klein(), mode="con")
    assert v.status == DISTINGUISHED and replay_certificate(v)
    v = match_pair(P, Z4, mode="tcon")
    assert v.status == MATCHED and replay_certificate(v)
    Z2 = cyclic(2)
    swapped = ConfigurationPair(Z2, (1,), from_blocks(Z2, [[1], [0]]))
    v = match_pair(swapped, Z2)
    assert v.status == MATCHED
    assert v.certificate["configs_G"] == v.certificate["configs_H"]


def test_match_pair_with_empty_block():
    G = F.symmetric3()
    from configeq.partitions import Partition
    labels = {x: 1 if x < 3 else 3 for x in G.elements()}
    P = ConfigurationPair(G, G.generators, Partition(3, labels.__getitem__, None, "gap"))
    v = match_pair(P, F.dihedral(3))
    assert v.status == MATCHED and replay_certificate(v)


def test_match_pair_partial_search_is_inconclusive():
    Z6 = cyclic(6)
    P = ConfigurationPair(Z6, (5,), from_blocks(Z6, [[0, 1, 2], [3, 4, 5]]))
    v = match_pair(P, Z6, SearchBounds(max_word_len=0))
    assert v.status == INCONCLUSIVE


def test_distinguished_and_matched_examples():
    v = equivalent_finite(cyclic(4), F.klein())
    assert v.status == DISTINGUISHED and replay_certificate(v)
    w = equivalent_finite(cyclic(6), F.symmetric3(), mode="tcon")
    assert w.status == DISTINGUISHED and replay_certificate(w)
    u = equivalent_finite(F.symmetric3(), F.symmetric3(), mode="tcon")
    assert u.status == MATCHED and replay_certificate(u)


def test_s3_two_sided_asymmetry_is_unmatched_in_z6():
    # a two-generator pair of S3 with an asymmetric two-sided configuration has no Z6 counterpart
    S3 = F.symmetric3()
    for lab in rgs_array(6, 2):
        P = ConfigurationPair(S3, S3.generators, from_labels(S3, [int(v) + 1 for v in lab]))
        T = configuration_set(P, TWO_SIDED)
        if any(c[1:3] != c[3:] for c in T.configs):
            v = match_pair(P, cyclic(6), mode="tcon")
            assert v.status == DISTINGUISHED and replay_certificate(v)
            return
    pytest.fail("no asymmetric pair found")


def test_symmetry_of_verdicts():
    pairs = [(cyclic(4), F.klein()), (cyclic(6), F.symmetric3()), (F.dihedral(3), F.symmetric3())]
    for G, H in pairs:
        a, b = equivalent_finite(G, H), equivalent_finite(H, G)
        assert {a.status, b.status} != {MATCHED, DISTINGUISHED}


@pytest.mark.parametrize("name,G,H", [p for p in F.isomorphic_presentations() if p[1].order <= 8],
                         ids=lambda v: v if isinstance(v, str) else "")
def test_isomorphic_presentations_match(name, G, H):
    for mode in ("con", "tcon"):
        assert equivalent_finite(G, H, mode=mode).status == MATCHED


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25)
def test_tcon_equality_implies_con_equality(seed):
    rng = random.Random(seed)
    G = F.symmetric3()
    H = F.dihedral(3)
    def rand(X):
        t = tuple(rng.choice(X.elements()) for _ in range(2))
        from configeq.groups import closure
        while len(closure(X, t)) != X.order:
            t = tuple(rng.choice(X.elements()) for _ in range(2))
        lab = rgs_array(X.order, 2)[rng.randrange(stirling2(X.order, 2))]
        return ConfigurationPair(X, t, from_labels(X, [int(v) + 1 for v in lab]))
    P, Q = rand(G), rand(H)
    TP, TQ = configuration_set(P, TWO_SIDED), configuration_set(Q, TWO_SIDED)
    if TP.configs == TQ.configs:
        assert configuration_set(P).configs == configuration_set(Q).configs
    assert project_two_sided(TP).configs == configuration_set(P).configs


def test_certificate_files_and_tampering(tmp_path):
    v = equivalent_finite(cyclic(4), F.klein(), mode="tcon")
    path = tmp_path / "cert.json"
    save_certificate(v, path)
    again = load_certificate(path)
    assert replay_certificate(again)
    assert replay_certificate(again, cyclic(4), F.klein())
    assert not replay_certificate(again, cyclic(4), cyclic(4))  # stale: different group
    doc = json.loads(path.read_text())
    doc["certificate"]["configs"][0][0] += 1
    assert not replay_certificate(doc)
    doc = json.loads(path.read_text())
    doc["certificate"]["groups"]["G"]["document"]["generators"] = [3]
    assert not replay_certificate(doc)
    m = match_pair(ConfigurationPair(cyclic(4), (1,), from_blocks(cyclic(4), [[0, 1], [2, 3]])), cyclic(4))
    doc = m.to_document()
    assert replay_certificate(copy.deepcopy(doc))
    doc["certificate"]["pair_H"]["labels"][0] = 2
    assert not replay_certificate(doc)


def test_bounds_validation_and_caps():
    with pytest.raises(ValueError):
        SearchBounds(max_blocks=0)
    v = equivalent_finite(cyclic(12), cyclic(12), SearchBounds(max_candidates=10))
    assert v.status == INCONCLUSIVE and "reason" in v.stats
    v = equivalent_finite(cyclic(30), cyclic(30))
    assert v.status == INCONCLUSIVE
    with pytest.raises(ValueError):
        replay_certificate(Verdict(INCONCLUSIVE, ONE_SIDED, SearchBounds()))


def test_jobs_do_not_change_keys():
    G = F.dihedral(4)
    a = key_set(G, 2, 2, TWO_SIDED, SearchBounds(), jobs=1)
    b = key_set(G, 2, 2, TWO_SIDED, SearchBounds(), jobs=3)
    assert a.keys == b.keys
