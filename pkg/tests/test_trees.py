from random import Random

import pytest

from thomplink.trees import (
    LEAF,
    BinaryTree,
    caret,
    caret_positions,
    common_refinement,
    graft_all,
    is_right_comb,
    leaf_exponents,
    random_tree,
    remove_caret,
    right_comb,
    split_along,
    tree_from_bits,
)


def test_bits_round_trip():
    rng = Random(1)
    for _ in range(100):
        t = random_tree(rng.randint(1, 12), rng)
        assert tree_from_bits(t.bits) == t
        assert len(t.bits) == 2 * t.leaf_count - 1


def test_bits_rejects_garbage():
    for bad in ("", "2", "10", "001", "110001"):
        with pytest.raises(ValueError):
            tree_from_bits(bad)


def test_right_comb_shape():
    assert right_comb(1) == LEAF
    assert right_comb(3).bits == "10100"
    for n in range(1, 8):
        t = right_comb(n)
        assert t.leaf_count == n
        assert is_right_comb(t)
    assert not is_right_comb(BinaryTree(caret(), LEAF))


def test_graft_and_split_along_invert():
    rng = Random(2)
    for _ in range(50):
        base = random_tree(rng.randint(1, 6), rng)
        parts = [random_tree(rng.randint(1, 4), rng) for _ in range(base.leaf_count)]
        refined = graft_all(base, parts)
        assert split_along(refined, base) == parts
        assert refined.leaf_count == sum(p.leaf_count for p in parts)


def test_common_refinement_is_upper_bound():
    rng = Random(3)
    for _ in range(50):
        n = rng.randint(1, 8)
        a, b = random_tree(n, rng), random_tree(n, rng)
        m = common_refinement(a, b)
        # m refines both: split_along must succeed
        split_along(m, a)
        split_along(m, b)


def test_caret_positions_and_removal():
    t = tree_from_bits("1101000")  # ((.(..)).)
    assert caret_positions(t) == {1}
    assert remove_caret(t, 1).bits == "11000"
    with pytest.raises(ValueError):
        remove_caret(t, 0)


def test_leaf_exponents_known_values():
    assert leaf_exponents(tree_from_bits("11000")) == [1, 0, 0]  # x0 source
    assert leaf_exponents(tree_from_bits("1011000")) == [0, 1, 0, 0]  # x1 source
    assert leaf_exponents(right_comb(5)) == [0] * 5
    # left comb with 4 leaves carries x0^2
    assert leaf_exponents(tree_from_bits("1110000")) == [2, 0, 0, 0]
    # source/target trees of x0^3 x2^-1 x0^-3
    assert leaf_exponents(tree_from_bits("111000100")) == [2, 0, 0, 0, 0]
    assert leaf_exponents(tree_from_bits("111010000")) == [2, 1, 0, 0, 0]
