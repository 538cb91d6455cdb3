import json
from random import Random

import pytest

from thomplink import identity, make_generator, random_element, tait_graph
from thomplink.tait import LOWER, UPPER, TaitEdge, TaitGraph


def test_identity_graph():
    t = tait_graph(identity())
    assert t.vertex_count == 1
    assert t.edges == ()


def test_x0_edges():
    t = tait_graph(make_generator(0))
    upper = sorted((e.left, e.right) for e in t.upper_edges())
    lower = sorted((e.left, e.right) for e in t.lower_edges())
    assert upper == [(0, 1), (0, 2)]
    assert lower == [(0, 1), (1, 2)]
    assert all(e.sign == 1 for e in t.upper_edges())
    assert all(e.sign == -1 for e in t.lower_edges())


def test_edge_counts_are_leaves_minus_one():
    rng = Random(20)
    for _ in range(50):
        p = random_element(rng)
        t = tait_graph(p)
        assert len(t.upper_edges()) == p.leaf_count - 1
        assert len(t.lower_edges()) == p.leaf_count - 1
        assert t.vertex_count == p.leaf_count


def test_nesting_invariant_fuzz():
    rng = Random(21)
    for _ in range(200):
        p = random_element(rng, 12)
        tait_graph(p).validate()  # raises on properly overlapping arcs


def test_validation_rejects_overlap():
    with pytest.raises(ValueError):
        TaitGraph(4, (TaitEdge(0, 2, UPPER, 1), TaitEdge(1, 3, UPPER, 1)))
    with pytest.raises(ValueError):
        TaitGraph(2, (TaitEdge(0, 1, UPPER, -1),))
    with pytest.raises(ValueError):
        TaitGraph(2, (TaitEdge(1, 0, LOWER, -1),))


def test_json_export():
    t = tait_graph(make_generator(0))
    data = json.loads(t.to_json())
    assert data["n"] == 3
    assert sorted(data["edges"]) == [
        [0, 1, "L", "-"],
        [0, 1, "U", "+"],
        [0, 2, "U", "+"],
        [1, 2, "L", "-"],
    ]
