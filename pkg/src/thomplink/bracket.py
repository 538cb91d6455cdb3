"""The Kauffman bracket by exact state sum, and the unit comparator.

The bracket is characterized by

    <U> = 1,   <L_X> = A <L_0> + A^-1 <L_oo>,   <L u U> = (-A^2 - A^-2) <L>.

Every crossing is resolved both ways, so evaluation is exact but costs
2**c states; the hot tally loop lives in a compiled extension when one was
built, with a pure-Python kernel as the import-time fallback.  Crossings
are resolved in index order and loops counted with union-find over arc
labels.

Bracket values of diagrams of one link differ by units -A^(+-3) (framing)
and whole factors delta per split trivial component, so link comparison
goes through :func:`equivalent_up_to_units`, a necessary condition whose
failure certifies that two links differ even after adding trivial
components.
"""

from __future__ import annotations

from .laurent import DELTA, ONE, LaurentPolynomial
from .links import LinkDiagram

try:  # pragma: no cover - exercised indirectly by the benchmark
    from . import _bracket_core as _kernel
except ImportError:  # pragma: no cover
    from . import _bracket_py as _kernel

__all__ = [
    "CrossingLimitError",
    "kauffman_bracket",
    "bracket_from_counts",
    "equivalent_up_to_units",
    "kernel_name",
]

DEFAULT_CROSSING_LIMIT = 24


class CrossingLimitError(ValueError):
    """Raised when a diagram exceeds the configured state-sum bound."""


def kernel_name() -> str:
    return _kernel.KERNEL


def _flatten(d: LinkDiagram) -> tuple[list[int], int]:
    table: dict[object, int] = {}
    flat: list[int] = []
    for c in d.crossings:
        for a in c:
            flat.append(table.setdefault(a, len(table)))
    return flat, len(table)


def bracket_from_counts(counts, c: int, free_loops: int) -> LaurentPolynomial:
    """Assemble the polynomial from per-(B-smoothings, loops) state tallies."""
    poly = LaurentPolynomial()
    for b, row in enumerate(counts):
        for loops, n in enumerate(row):
            if not n:
                continue
            total_loops = loops + free_loops
            if total_loops < 1:
                raise ValueError("a smoothed state must contain at least one loop")
            term = (DELTA ** (total_loops - 1)).shifted(c - 2 * b) * n
            poly = poly + term
    return poly


def kauffman_bracket(
    d: LinkDiagram, max_crossings: int = DEFAULT_CROSSING_LIMIT
) -> LaurentPolynomial:
    """Exact bracket of a diagram, normalized so one free loop gives 1."""
    c = d.crossing_count
    if c > max_crossings:
        raise CrossingLimitError(
            f"diagram has {c} crossings, exceeding the bound {max_crossings}"
        )
    if c == 0:
        if d.free_loops == 0:
            raise ValueError("the empty diagram has no bracket normalization")
        return DELTA ** (d.free_loops - 1)
    flat, n_arcs = _flatten(d)
    counts = _kernel.state_counts(flat, n_arcs)
    return bracket_from_counts(counts, c, d.free_loops)


def _unit_equal(p: LaurentPolynomial, q: LaurentPolynomial) -> bool:
    """True when p == s * A^(3k) * q for some sign s and integer k."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    shift = p.min_exponent() - q.min_exponent()
    if shift % 3 != 0:
        return False
    moved = q.shifted(shift)
    return p == moved or p == -moved


def equivalent_up_to_units(
    p: LaurentPolynomial, q: LaurentPolynomial, max_unknots: int = 4
) -> bool:
    """Necessary condition for two bracket values to describe one link up to
    trivial components: p * delta^m matches q (or vice versa) up to a sign
    and a power A^(3k), for some 0 <= m <= max_unknots."""
    if max_unknots < 0:
        raise ValueError("max_unknots must be non-negative")
    dp = ONE
    for m in range(max_unknots + 1):
        if _unit_equal(p * dp, q) or _unit_equal(q * dp, p):
            return True
        dp = dp * DELTA
    return False
