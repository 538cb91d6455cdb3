"""Tree-pair elements of Thompson's group F, their unoriented links, exact
Kauffman brackets, and annular-strand-diagram conjugacy testing."""

from .bracket import (
    CrossingLimitError,
    equivalent_up_to_units,
    kauffman_bracket,
    kernel_name,
)
from .conway import MIRROR, ConwayCode, continued_fraction, two_bridge_diagram
from .families import (
    Hsequence,
    attach_a,
    conjugate,
    element_a,
    g_element,
    h_element,
    h_sequence,
    tree_T,
)
from .laurent import A, DELTA, ONE, ZERO, LaurentPolynomial
from .links import (
    LinkDiagram,
    SimplificationReport,
    component_count,
    direct_link,
    disjoint_union,
    link_of,
    medial_link,
    mirror_diagram,
    simplify,
)
from .pairs import (
    TreePair,
    Word,
    WordSyntaxError,
    equals,
    expand,
    from_word,
    identity,
    invert,
    is_positive,
    make_generator,
    multiply,
    random_element,
    reduce_pair,
    to_word,
)
from .strand import (
    AnnularStrandDiagram,
    StrandDiagram,
    annular_closure,
    are_conjugate,
    canonical_code,
    concatenate,
    reduce_annular,
    strand_from_pair,
)
from .strand import component_count as annular_component_count
from .tait import TaitEdge, TaitGraph, tait_graph
from .trees import BinaryTree, LEAF, right_comb, tree_from_bits

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
