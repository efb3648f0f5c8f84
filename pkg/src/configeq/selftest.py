"""Quick invariant suite behind ``configeq selftest``.

Each check returns True/False; the runner prints one line per check.
The full pytest suite is far more thorough; this is a smoke test for an
installed copy.
"""
from __future__ import annotations

import random
from typing import Callable

from . import fixtures as F
from .configs import (ONE_SIDED, TWO_SIDED, ConfigurationPair, check_translation_invariance,
                      configuration_set, project_two_sided)
from .equivalence import DISTINGUISHED, MATCHED, equivalent_finite, replay_certificate
from .golden import (QuotientMap, finite_golden_system, polycyclic_golden_system, polycyclic_facts,
                     verify_axioms, verify_golden_property)
from .groups import cyclic
from .partitions import from_labels
from .words import concat, enumerate_pairs, evaluate, invert


def _word_identities(seed: int) -> bool:
    for G in (cyclic(4), F.symmetric3(), F.infinite_dihedral()):
        gens = G.generators
        pairs = list(enumerate_pairs(len(gens), 3))
        rng = random.Random(seed)
        for _ in range(200):
            p, q = rng.choice(pairs), rng.choice(pairs)
            if evaluate(concat(p, q), gens, G) != G.mul(evaluate(p, gens, G), evaluate(q, gens, G)):
                return False
            if evaluate(invert(p), gens, G) != G.inv(evaluate(p, gens, G)):
                return False
    return True


def _translation(seed: int) -> bool:
    rng = random.Random(seed)
    G = F.symmetric3()
    for _ in range(5):
        labels = [rng.randint(1, 3) for _ in G.elements()]
        labels = [1 + sorted(set(labels)).index(v) for v in labels]
        P = ConfigurationPair(G, G.generators, from_labels(G, labels))
        if not all(check_translation_invariance(P, g) for g in G.elements()):
            return False
    return True


def _projection(seed: int) -> bool:
    G = F.infinite_dihedral()
    P = polycyclic_golden_system(G).config_pair()
    return (project_two_sided(configuration_set(P, TWO_SIDED, 4)).configs
            == configuration_set(P, ONE_SIDED, 4).configs)


def _golden(seed: int) -> bool:
    Z6, Z3 = cyclic(6), cyclic(3)
    systems = [finite_golden_system(Z6, QuotientMap.from_images(Z6, Z3, [1])),
               polycyclic_golden_system(F.infinite_dihedral())]
    for s in systems:
        if not verify_axioms(s, 4).ok or not verify_golden_property(s, s.config_pair(), 3).ok:
            return False
    return True


def _facts(seed: int) -> bool:
    return polycyclic_facts(F.infinite_dihedral(), 4).ok and polycyclic_facts(F.heisenberg(), 3).ok


def _equivalence(seed: int) -> bool:
    v = equivalent_finite(cyclic(4), F.klein())
    w = equivalent_finite(F.symmetric3(), F.dihedral(3))
    return (v.status == DISTINGUISHED and replay_certificate(v)
            and w.status == MATCHED and replay_certificate(w))


CHECKS: list[tuple[str, Callable[[int], bool]]] = [
    ("word identities", _word_identities),
    ("translation invariance", _translation),
    ("two-sided projection", _projection),
    ("golden axioms and self-consistency", _golden),
    ("polycyclic block identities", _facts),
    ("equivalence verdicts replay", _equivalence),
]


def run(seed: int = 0, out=print) -> bool:
    ok = True
    for name, check in CHECKS:
        try:
            passed = check(seed)
        except Exception as exc:  # report, keep going
            passed = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        ok &= passed
        out(f"{'PASS' if passed else 'FAIL'} {name}")
    out(f"{sum(1 for _ in CHECKS)} checks, {'all passed' if ok else 'failures'}")
    return ok
