"""Search small groups for pairs with equal one-sided but different two-sided sets.

Whether Con equality forces tcon equality is open.  This experiment looks
for single-pair witnesses: two pairs (possibly on different groups of the
same order) whose one-sided configuration sets coincide up to block
relabelling while their two-sided sets differ.  Such a pair says nothing
about the group-level question, which quantifies over all pairs, but it
shows the two-sided data carries extra information pair by pair.

    python3 scripts/converse_hunt.py --max-order 8 --blocks 2
"""
import argparse
import itertools
import time

from configeq import fixtures as F
from configeq.configs import ONE_SIDED, TWO_SIDED
from configeq.equivalence import SearchBounds, key_set
from configeq.groups import cyclic


def groups(max_order):
    cands = [("Z4", cyclic(4)), ("Z2xZ2", F.klein()), ("Z6", cyclic(6)), ("S3", F.symmetric3()),
             ("Z8", cyclic(8)), ("Z4xZ2", F.z4_cross_z2()), ("D4", F.dihedral(4))]
    return [(n, G) for n, G in cands if G.order <= max_order]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=8)
    ap.add_argument("--blocks", type=int, default=2)
    ap.add_argument("--gens", type=int, default=2)
    args = ap.parse_args()
    bounds = SearchBounds(max_candidates=10 ** 9)
    t0 = time.perf_counter()
    one, two = {}, {}
    for name, G in groups(args.max_order):
        for n in range(1, args.gens + 1):
            one[name, n] = key_set(G, n, args.blocks, ONE_SIDED, bounds)
            two[name, n] = key_set(G, n, args.blocks, TWO_SIDED, bounds)
            print(f"{name:6s} n={n}: {len(one[name, n].keys):6d} con keys, {len(two[name, n].keys):6d} tcon keys")
    print()
    for (a, n), (b, m) in itertools.combinations(sorted(one), 2):
        if n != m or not one[a, n].keys or not one[b, n].keys:
            continue  # no generating n-tuple on one side
        same_con = one[a, n].keys.keys() == one[b, n].keys.keys()
        same_tcon = two[a, n].keys.keys() == two[b, n].keys.keys()
        if same_con:
            verdict = "tcon also equal" if same_tcon else "tcon differs: witness of extra two-sided information"
            print(f"{a} ~ {b} at n={n}, k={args.blocks} (con key sets equal): {verdict}")
    print(f"\n{time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
