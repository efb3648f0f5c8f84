from .base import (Group, InvalidElement, PresentationError, closure, equal, generates,
                   identity, inverse, multiply)
from .ball import DEFAULT_CAP, DEFAULT_RADIUS, BallCapExceeded, ball, sphere_sizes
from .finite import FiniteGroup, cyclic, finite_direct_product, from_permutations, quotient_group
from .io import dump_group, group_from_document, load_group
from .polycyclic import PolycyclicGroup
from .products import DirectProduct, FreeProduct


def collect(G: PolycyclicGroup, word):
    """Collected exponent vector of a word of (1-based generator, +-1) letters."""
    return G.collect(word)


make_finite = FiniteGroup
make_polycyclic = PolycyclicGroup
make_free_product = FreeProduct
make_direct_product = DirectProduct

__all__ = [
    "Group", "InvalidElement", "PresentationError", "BallCapExceeded",
    "FiniteGroup", "PolycyclicGroup", "FreeProduct", "DirectProduct",
    "ball", "sphere_sizes", "closure", "collect", "cyclic", "equal", "finite_direct_product",
    "from_permutations", "generates", "identity", "inverse", "multiply", "quotient_group",
    "group_from_document", "load_group", "dump_group",
    "make_finite", "make_polycyclic", "make_free_product", "make_direct_product",
    "DEFAULT_CAP", "DEFAULT_RADIUS",
]
