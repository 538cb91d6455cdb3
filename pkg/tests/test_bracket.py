from random import Random

import pytest

from thomplink import (
    DELTA,
    ONE,
    CrossingLimitError,
    LaurentPolynomial,
    LinkDiagram,
    disjoint_union,
    equivalent_up_to_units,
    kauffman_bracket,
    mirror_diagram,
)
from thomplink import bracket as bracket_mod
from thomplink import _bracket_py
from util import random_diagram

# Two-crossing clasp: closure of a two-strand braid with two equal crossings.
HOPF = LinkDiagram([(2, 1, 3, 4), (4, 3, 1, 2)])


def brute_force_bracket(d: LinkDiagram) -> LaurentPolynomial:
    """Independent oracle: explicit state enumeration with cycle tracing."""
    c = len(d.crossings)
    total = LaurentPolynomial()
    for state in range(2 ** c):
        joins = []
        b = 0
        for j, (a0, a1, a2, a3) in enumerate(d.crossings):
            if (state >> j) & 1:
                b += 1
                joins += [(a0, a3), (a1, a2)]
            else:
                joins += [(a0, a1), (a2, a3)]
        neighbours = {}
        for x, y in joins:
            neighbours.setdefault(x, []).append(y)
            neighbours.setdefault(y, []).append(x)
        seen, loops = set(), 0
        for start in neighbours:
            if start in seen:
                continue
            loops += 1
            stack = [start]
            while stack:
                v = stack.pop()
                if v in seen:
                    continue
                seen.add(v)
                stack.extend(neighbours[v])
        term = (DELTA ** (loops + d.free_loops - 1)).shifted(c - 2 * b)
        total = total + term
    return total


def test_unknot_and_loops():
    assert kauffman_bracket(LinkDiagram((), 1)) == ONE
    assert kauffman_bracket(LinkDiagram((), 2)) == DELTA
    assert kauffman_bracket(LinkDiagram((), 3)) == DELTA * DELTA


def test_hopf_value_against_independent_enumeration():
    expected = LaurentPolynomial({4: -1, -4: -1})
    assert brute_force_bracket(HOPF) == expected
    assert kauffman_bracket(HOPF) == expected


def test_single_signed_arc_is_a_kink():
    # pins the crossing-sign realization: one positive arc gives -A^3
    from thomplink import medial_link
    from thomplink.tait import TaitEdge, TaitGraph

    plus = medial_link(TaitGraph(2, (TaitEdge(0, 1, "U", 1),)))
    minus = medial_link(TaitGraph(2, (TaitEdge(0, 1, "L", -1),)))
    assert kauffman_bracket(plus) == LaurentPolynomial({3: -1})
    assert kauffman_bracket(minus) == LaurentPolynomial({-3: -1})


def test_kernel_matches_brute_force_fuzz():
    rng = Random(40)
    for _ in range(25):
        d = random_diagram(rng, 6)
        assert kauffman_bracket(d, 26) == brute_force_bracket(d)


def test_python_and_active_kernels_agree():
    rng = Random(41)
    for _ in range(10):
        d = random_diagram(rng, 6)
        flat, n_arcs = bracket_mod._flatten(d)
        assert bracket_mod._kernel.state_counts(flat, n_arcs) == _bracket_py.state_counts(
            flat, n_arcs
        )


def test_mirror_symmetry_fuzz():
    rng = Random(42)
    for _ in range(20):
        d = random_diagram(rng, 7)
        assert kauffman_bracket(mirror_diagram(d), 26) == kauffman_bracket(d, 26).mirrored()


def test_disjoint_union_multiplies_by_delta():
    rng = Random(43)
    for _ in range(10):
        d1, d2 = random_diagram(rng, 5), random_diagram(rng, 5)
        b = kauffman_bracket(disjoint_union(d1, d2), 26)
        assert b == kauffman_bracket(d1, 26) * kauffman_bracket(d2, 26) * DELTA


def test_crossing_bound():
    rng = Random(44)
    d = random_diagram(rng, 9)
    with pytest.raises(CrossingLimitError):
        kauffman_bracket(d, max_crossings=d.crossing_count - 1)


def test_comparator_basics():
    one, delta = ONE, DELTA
    assert equivalent_up_to_units(one, one, 0)
    assert equivalent_up_to_units(delta, one, 1)
    assert not equivalent_up_to_units(delta, one, 0)
    # symmetric through its two-sided definition
    assert equivalent_up_to_units(one, delta, 1)
    # invariant under -A^3 units on either side
    kink = LaurentPolynomial({3: -1})
    assert equivalent_up_to_units(one * kink, one, 0)
    hopf = LaurentPolynomial({4: -1, -4: -1})
    fig8 = LaurentPolynomial({8: 1, 4: -1, 0: 1, -4: -1, -8: 1})
    assert not equivalent_up_to_units(hopf, fig8, 2)


def test_comparator_reflexive_symmetric_fuzz():
    rng = Random(45)
    for _ in range(15):
        b = kauffman_bracket(random_diagram(rng, 6), 26)
        assert equivalent_up_to_units(b, b, 0)
        shifted = b.shifted(6) * -1
        assert equivalent_up_to_units(b, shifted, 0)
        assert equivalent_up_to_units(shifted, b, 0)
        assert equivalent_up_to_units(b * DELTA, b, 4)
        assert equivalent_up_to_units(b, b * DELTA, 4)


def test_laurent_text_format():
    assert str(LaurentPolynomial({4: -1, -4: -1})) == "-1*A^4 + -1*A^-4"
    assert str(ONE) == "1*A^0"
    assert str(LaurentPolynomial()) == "0"


def test_empty_diagram_rejected():
    with pytest.raises(ValueError):
        kauffman_bracket(LinkDiagram((), 0))
