"""Rooted finite binary trees with a stable preorder bitstring encoding.

A tree is either a leaf or an internal node with exactly two children.
Trees are immutable; the preorder serialization writes ``1`` for a node
followed by the encodings of its children and ``0`` for a leaf, so a tree
with ``n`` leaves becomes a string of ``2n - 1`` bits.  The bitstring is
total-order comparable and round-trips exactly, which makes it suitable
for golden files and JSON payloads.
"""

from __future__ import annotations

from random import Random

__all__ = [
    "BinaryTree",
    "LEAF",
    "node",
    "caret",
    "right_comb",
    "is_right_comb",
    "tree_from_bits",
    "graft",
    "graft_all",
    "split_along",
    "caret_positions",
    "remove_caret",
    "common_refinement",
    "leaf_exponents",
    "random_tree",
]


class BinaryTree:
    """Immutable rooted binary tree; leaves carry no payload."""

    __slots__ = ("left", "right", "leaf_count", "bits")

    def __init__(self, left: "BinaryTree | None" = None, right: "BinaryTree | None" = None):
        if (left is None) != (right is None):
            raise ValueError("an internal node needs exactly two children")
        self.left = left
        self.right = right
        if left is None:
            self.leaf_count = 1
            self.bits = "0"
        else:
            self.leaf_count = left.leaf_count + right.leaf_count
            self.bits = "1" + left.bits + right.bits

    @property
    def is_leaf(self) -> bool:
        return self.left is None

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryTree) and self.bits == other.bits

    def __hash__(self) -> int:
        return hash(self.bits)

    def __repr__(self) -> str:
        return f"BinaryTree({self.bits!r})"


LEAF = BinaryTree()


def node(left: BinaryTree, right: BinaryTree) -> BinaryTree:
    return BinaryTree(left, right)


def caret() -> BinaryTree:
    return BinaryTree(LEAF, LEAF)


def right_comb(n: int) -> BinaryTree:
    """The right comb with ``n`` leaves (every left child a leaf)."""
    if n < 1:
        raise ValueError("a tree has at least one leaf")
    t = LEAF
    for _ in range(n - 1):
        t = BinaryTree(LEAF, t)
    return t


def is_right_comb(t: BinaryTree) -> bool:
    while not t.is_leaf:
        if not t.left.is_leaf:
            return False
        t = t.right
    return True


def tree_from_bits(bits: str) -> BinaryTree:
    """Parse a preorder bitstring; inverse of ``BinaryTree.bits``."""

    def parse(i: int) -> tuple[BinaryTree, int]:
        if i >= len(bits):
            raise ValueError(f"truncated tree bitstring {bits!r}")
        if bits[i] == "0":
            return LEAF, i + 1
        if bits[i] != "1":
            raise ValueError(f"invalid character {bits[i]!r} in tree bitstring")
        left, j = parse(i + 1)
        right, k = parse(j)
        return BinaryTree(left, right), k

    tree, end = parse(0)
    if end != len(bits):
        raise ValueError(f"trailing characters in tree bitstring {bits!r}")
    return tree


def graft(t: BinaryTree, leaf_index: int, sub: BinaryTree) -> BinaryTree:
    """Replace leaf ``leaf_index`` of ``t`` with ``sub``."""
    if not 0 <= leaf_index < t.leaf_count:
        raise IndexError(f"leaf index {leaf_index} out of range for {t.leaf_count} leaves")
    if t.is_leaf:
        return sub
    nl = t.left.leaf_count
    if leaf_index < nl:
        return BinaryTree(graft(t.left, leaf_index, sub), t.right)
    return BinaryTree(t.left, graft(t.right, leaf_index - nl, sub))


def graft_all(t: BinaryTree, parts: list[BinaryTree]) -> BinaryTree:
    """Replace leaf ``i`` of ``t`` with ``parts[i]`` for every leaf at once."""
    if len(parts) != t.leaf_count:
        raise ValueError("need exactly one replacement per leaf")
    if t.is_leaf:
        return parts[0]
    nl = t.left.leaf_count
    return BinaryTree(graft_all(t.left, parts[:nl]), graft_all(t.right, parts[nl:]))


def split_along(refined: BinaryTree, base: BinaryTree) -> list[BinaryTree]:
    """Decompose ``refined`` along ``base``: the list of subtrees hanging at
    the positions of ``base``'s leaves.  ``refined`` must be an expansion of
    ``base`` (``graft_all(base, split_along(refined, base)) == refined``)."""
    if base.is_leaf:
        return [refined]
    if refined.is_leaf:
        raise ValueError("first tree does not refine the second")
    return split_along(refined.left, base.left) + split_along(refined.right, base.right)


def common_refinement(a: BinaryTree, b: BinaryTree) -> BinaryTree:
    """Least common expansion of two trees (recursive merge)."""
    if a.is_leaf:
        return b
    if b.is_leaf:
        return a
    return BinaryTree(common_refinement(a.left, b.left), common_refinement(a.right, b.right))


def caret_positions(t: BinaryTree) -> set[int]:
    """Indices ``i`` such that leaves ``i`` and ``i + 1`` are siblings."""
    out: set[int] = set()

    def walk(s: BinaryTree, base: int) -> None:
        if s.is_leaf:
            return
        if s.left.is_leaf and s.right.is_leaf:
            out.add(base)
            return
        walk(s.left, base)
        walk(s.right, base + s.left.leaf_count)

    walk(t, 0)
    return out


def remove_caret(t: BinaryTree, i: int) -> BinaryTree:
    """Collapse the caret whose leaves are ``i`` and ``i + 1`` back to a leaf."""
    if t.is_leaf:
        raise ValueError("no caret to remove")
    if t.left.is_leaf and t.right.is_leaf:
        if i != 0:
            raise ValueError(f"leaves {i}, {i + 1} are not siblings")
        return LEAF
    nl = t.left.leaf_count
    if i + 1 <= nl - 1:
        return BinaryTree(remove_caret(t.left, i), t.right)
    if i >= nl:
        return BinaryTree(t.left, remove_caret(t.right, i - nl))
    # pair straddles the children boundary, never siblings
    raise ValueError(f"leaves {i}, {i + 1} are not siblings")


def leaf_exponents(t: BinaryTree) -> list[int]:
    """Per-leaf exponents of the positive word carried by a tree.

    For leaf ``k`` the exponent is the length of the maximal chain of
    left-child edges climbing from the leaf, reduced by one when the top of
    the chain sits on the right spine.  The tree pair ``(t, right_comb(n))``
    equals the product of ``x_k ** e_k`` with ``k`` ascending.
    """
    exponents = [0] * t.leaf_count

    def walk(s: BinaryTree, base: int, on_spine: bool, is_top: bool) -> None:
        # on_spine: s is reachable from the root by right-child edges only.
        # is_top: s is not a left child, so it tops the chain of its
        # leftmost leaf.
        if is_top:
            length, cur = 0, s
            while not cur.is_leaf:
                length += 1
                cur = cur.left
            exponents[base] = max(0, length - 1 if on_spine else length)
        if s.is_leaf:
            return
        walk(s.left, base, False, False)
        walk(s.right, base + s.left.leaf_count, on_spine, True)

    walk(t, 0, True, True)
    return exponents


def random_tree(n_leaves: int, rng: Random) -> BinaryTree:
    """Uniform-ish random tree with the given number of leaves."""
    if n_leaves < 1:
        raise ValueError("a tree has at least one leaf")
    if n_leaves == 1:
        return LEAF
    k = rng.randint(1, n_leaves - 1)
    return BinaryTree(random_tree(k, rng), random_tree(n_leaves - k, rng))
