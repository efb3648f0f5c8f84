"""Group description documents (JSON-compatible dicts).

Indices in documents are 1-based wherever they name generators; finite
group elements are 0-based row indices of the table.  See
``docs/group_format.md`` for the schema and worked files.
"""
from __future__ import annotations

import json
from pathlib import Path

from .base import Group, PresentationError
from .finite import FiniteGroup, from_permutations
from .polycyclic import PolycyclicGroup
from .products import DirectProduct, FreeProduct


def group_from_document(doc: dict) -> Group:
    kind = doc.get("kind")
    if kind == "finite":
        return _finite(doc)
    if kind == "polycyclic":
        return _polycyclic(doc)
    if kind in ("free_product", "free-product"):
        return FreeProduct([group_from_document(f) for f in _factors(doc)])
    if kind in ("direct_product", "direct-product"):
        return DirectProduct([group_from_document(f) for f in _factors(doc)])
    raise PresentationError(f"unknown group kind {kind!r}")


def load_group(path) -> Group:
    with open(path) as fh:
        return group_from_document(json.load(fh))


def dump_group(G: Group, path) -> None:
    Path(path).write_text(json.dumps(G.to_document(), indent=1) + "\n")


def _factors(doc):
    factors = doc.get("factors")
    if not factors:
        raise PresentationError("product needs a non-empty 'factors' list")
    return factors


def _finite(doc) -> FiniteGroup:
    if "permutations" in doc:
        return from_permutations(doc["permutations"], max_order=doc.get("max_order", 256))
    if "table" not in doc:
        raise PresentationError("finite group needs 'table' or 'permutations'")
    gens = doc.get("generators")
    if gens is None:
        gens = list(range(len(doc["table"])))
    return FiniteGroup(doc["table"], gens, names=doc.get("names"),
                       max_order=doc.get("max_order", 256))


def _polycyclic(doc) -> PolycyclicGroup:
    n = int(doc["n"])
    fin = [int(i) - 1 for i in doc.get("finite_index_set", [])]
    orders = doc.get("relative_orders", [])
    if isinstance(orders, dict):
        orders = [orders[str(i + 1)] for i in fin]
    if len(orders) != len(fin):
        raise PresentationError("relative_orders must align with finite_index_set")
    powers = doc.get("power_relations", [[0] * n for _ in fin])
    if isinstance(powers, dict):
        powers = [powers.get(str(i + 1), [0] * n) for i in fin]
    if len(powers) != len(fin):
        raise PresentationError("power_relations must align with finite_index_set")
    conj = {}
    for i, j, w in doc.get("conjugation_relations", []):
        conj[(int(i) - 1, int(j) - 1)] = tuple(w)
    inv_conj = {}
    for i, j, w in doc.get("inverse_conjugation_relations", []):
        inv_conj[(int(i) - 1, int(j) - 1)] = tuple(w)
    return PolycyclicGroup(
        n,
        relative_orders=dict(zip(fin, orders)),
        power_relations={i: tuple(w) for i, w in zip(fin, powers)},
        conjugations=conj,
        inverse_conjugations=inv_conj,
        generators=doc.get("generators"),
    )
