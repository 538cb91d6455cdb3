"""Shared helpers for the test suite."""

from random import Random

from thomplink import (
    LinkDiagram,
    TreePair,
    direct_link,
    make_generator,
    random_element,
)
from thomplink.trees import graft


def graft_element(p: TreePair, leaf: int, g: TreePair) -> TreePair:
    """Insert the diagram of ``g`` at a shared leaf of ``p``'s diagram."""
    return TreePair(graft(p.source, leaf, g.source), graft(p.target, leaf, g.target))


def random_diagram(rng: Random, max_leaves: int = 8) -> LinkDiagram:
    return direct_link(random_element(rng, max_leaves))


X0 = make_generator(0)
X1 = make_generator(1)
