"""The two element families driving the theorem-reproduction experiments.

Family one: wrap any reduced element inside the fixed 5-leaf element
``a = x0^3 x2^-1 x0^-3`` by grafting its source/target trees onto the
first leaf of a's trees.  Each wrap adds exactly four leaves and keeps the
diagram reduced, the produced link never changes, and the reduced annular
diagrams gain one component per step, so the sequence crosses infinitely
many conjugacy classes while drawing one link.

Family two: positive elements g_n whose source tree T_n grows by a
three-leaf block on the rightmost leaf.  Conjugating the generators by
them stays inside one conjugacy class while the links run through the
2-bridge family C(1, ..., 1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .pairs import TreePair, equals, from_word, invert, is_positive, make_generator, multiply, reduce_pair
from .trees import BinaryTree, LEAF, caret, graft, right_comb

__all__ = [
    "element_a",
    "attach_a",
    "Hsequence",
    "h_sequence",
    "tree_T",
    "g_element",
    "h_element",
    "conjugate",
]

_A_WORD = "x0 x0 x0 x2^-1 x0^-1 x0^-1 x0^-1"
_a_cached: TreePair | None = None


def element_a() -> TreePair:
    """The reduced 5-leaf element a = x0^3 x2^-1 x0^-3."""
    global _a_cached
    if _a_cached is None:
        _a_cached = from_word(_A_WORD)
    return _a_cached


def attach_a(p: TreePair) -> TreePair:
    """Graft ``p``'s trees onto the first leaf of a's trees.

    For reduced input the output is reduced and has exactly four more
    leaves; it always represents a different group element.
    """
    a = element_a()
    return TreePair(graft(a.source, 0, p.source), graft(a.target, 0, p.target))


@dataclass(frozen=True)
class Hsequence:
    seed: TreePair
    elements: tuple[TreePair, ...]


def h_sequence(seed: TreePair, n: int) -> Hsequence:
    """``n`` elements starting from ``seed``, each wrapped once more."""
    if n < 1:
        raise ValueError("need at least one element")
    seed = reduce_pair(seed)
    out = [seed]
    for _ in range(n - 1):
        out.append(attach_a(out[-1]))
    return Hsequence(seed, tuple(out))


_BLOCK = BinaryTree(caret(), LEAF)  # the grafted three-leaf block ((..).)


def tree_T(n: int) -> BinaryTree:
    """T_0 is the caret; T_n grafts the block onto the rightmost leaf, so
    T_n has 2n + 2 leaves."""
    if n < 0:
        raise ValueError("n must be non-negative")
    t = caret()
    for _ in range(n):
        t = graft(t, t.leaf_count - 1, _BLOCK)
    return t


def g_element(n: int) -> TreePair:
    """Positive element with source T_n and right-comb target."""
    src = tree_T(n)
    return TreePair(src, right_comb(src.leaf_count))


def h_element(n: int) -> TreePair:
    """Positive element whose source hangs T_n under the right leaf of a caret."""
    src = BinaryTree(LEAF, tree_T(n))
    return TreePair(src, right_comb(src.leaf_count))


def _fast_conjugate_shape(g: TreePair, x_index: int) -> TreePair:
    """Caret-attachment form of ``g x_i g^-1`` for positive ``g``.

    For ``x0`` the conjugate's source is g's source tree with a caret on the
    leftmost leaf and its target the same tree with a caret on the rightmost
    leaf; for ``x1`` the source caret goes on the second leaf from the left.
    """
    base = reduce_pair(g).source
    source_leaf = 0 if x_index == 0 else 1
    return TreePair(
        graft(base, source_leaf, caret()),
        graft(base, base.leaf_count - 1, caret()),
    )


def conjugate(g: TreePair, x: TreePair) -> TreePair:
    """Reduced ``g * x * g^-1``.

    When ``g`` is positive and ``x`` is ``x0`` or ``x1`` the caret-attachment
    fast path is computed as well and the two results asserted equal; the
    dual computation doubles as a check of the multiplication orientation.
    """
    result = multiply(multiply(g, x), invert(g))
    if is_positive(g):
        for idx in (0, 1):
            if equals(x, make_generator(idx)) and reduce_pair(g).leaf_count >= 2:
                shape = _fast_conjugate_shape(g, idx)
                if not equals(result, shape):
                    raise AssertionError(
                        "caret-attachment conjugate disagrees with multiplication"
                    )
    return result
