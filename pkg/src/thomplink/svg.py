"""Minimal deterministic SVG renderings (documentation aid, no styling contract)."""

from __future__ import annotations

from .pairs import TreePair
from .tait import UPPER, TaitGraph
from .trees import BinaryTree

__all__ = ["tree_pair_svg", "tait_graph_svg", "direct_link_svg"]

_SCALE = 40
_HEADER = '<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vb}" width="{w}" height="{h}">'


def _tree_lines(tree: BinaryTree, flip: bool, out: list[str]) -> None:
    sign = -1 if flip else 1

    def pos(t: BinaryTree, base: int) -> tuple[float, float]:
        if t.is_leaf:
            return (base * _SCALE, 0.0)
        lx, ly = pos(t.left, base)
        rx, ry = pos(t.right, base + t.left.leaf_count)
        x = (lx + rx) / 2
        y = sign * (min(ly * sign, ry * sign) - _SCALE)
        for cx, cy in ((lx, ly), (rx, ry)):
            out.append(
                f'<line x1="{x:.1f}" y1="{y:.1f}" x2="{cx:.1f}" y2="{cy:.1f}" '
                'stroke="black" stroke-width="2"/>'
            )
        return (x, y)

    pos(tree, 0)


def _wrap(body: list[str], x0: float, y0: float, x1: float, y1: float) -> str:
    pad = _SCALE
    vb = f"{x0 - pad:.0f} {y0 - pad:.0f} {x1 - x0 + 2 * pad:.0f} {y1 - y0 + 2 * pad:.0f}"
    head = _HEADER.format(vb=vb, w=int(x1 - x0 + 2 * pad), h=int(y1 - y0 + 2 * pad))
    return "\n".join([head, *body, "</svg>"])


def tree_pair_svg(p: TreePair) -> str:
    body: list[str] = []
    _tree_lines(p.source, False, body)
    _tree_lines(p.target, True, body)
    n = p.leaf_count
    body.append(
        f'<line x1="{-_SCALE / 2}" y1="0" x2="{(n - 0.5) * _SCALE:.1f}" y2="0" '
        'stroke="gray" stroke-dasharray="4 4"/>'
    )
    depth = _SCALE * (n + 1)
    return _wrap(body, -_SCALE, -depth, n * _SCALE, depth)


def tait_graph_svg(t: TaitGraph) -> str:
    body: list[str] = []
    for v in range(t.vertex_count):
        body.append(f'<circle cx="{v * _SCALE}" cy="0" r="4" fill="black"/>')
    max_r = _SCALE
    for e in t.edges:
        rx = (e.right - e.left) * _SCALE / 2
        cx = (e.left + e.right) * _SCALE / 2
        max_r = max(max_r, rx)
        sweep = 1 if e.half == UPPER else 0
        color = "red" if e.half == UPPER else "blue"
        body.append(
            f'<path d="M {e.left * _SCALE} 0 A {rx:.1f} {rx:.1f} 0 0 {sweep} '
            f'{e.right * _SCALE} 0" fill="none" stroke="{color}" stroke-width="2"/>'
        )
        label_y = -rx - 4 if e.half == UPPER else rx + 12
        body.append(
            f'<text x="{cx:.1f}" y="{label_y:.1f}" font-size="12" text-anchor="middle">'
            f'{"+" if e.sign > 0 else "-"}</text>'
        )
    return _wrap(body, 0, -max_r, (t.vertex_count - 1) * _SCALE, max_r)


def direct_link_svg(p: TreePair) -> str:
    """Tree diagram closure with connecting edges; understrand gaps at nodes."""
    body: list[str] = []
    n = p.leaf_count
    positions: dict[tuple[bool, str], tuple[float, float]] = {}

    def layout(tree: BinaryTree, flip: bool) -> None:
        sign = -1 if flip else 1

        def pos(t: BinaryTree, base: int, path: str) -> tuple[float, float]:
            if t.is_leaf:
                return (base * _SCALE, 0.0)
            lx, ly = pos(t.left, base, path + "0")
            rx, ry = pos(t.right, base + t.left.leaf_count, path + "1")
            x = (lx + rx) / 2
            y = sign * (min(ly * sign, ry * sign) - _SCALE)
            positions[(flip, path)] = (x, y)
            for cx, cy in ((lx, ly), (rx, ry)):
                body.append(
                    f'<line x1="{x:.1f}" y1="{y:.1f}" x2="{cx:.1f}" y2="{cy:.1f}" '
                    'stroke="black" stroke-width="2"/>'
                )
            return (x, y)

        pos(tree, 0, "")

    if n == 1:
        body.append(f'<circle cx="0" cy="0" r="{_SCALE}" fill="none" stroke="black" stroke-width="2"/>')
        return _wrap(body, -_SCALE, -_SCALE, _SCALE, _SCALE)

    layout(p.source, False)
    layout(p.target, True)

    def gap_owner(tree: BinaryTree) -> dict[int, str]:
        owners: dict[int, str] = {}

        def walk(t: BinaryTree, base: int, path: str) -> None:
            if t.is_leaf:
                return
            owners[base + t.left.leaf_count] = path
            walk(t.left, base, path + "0")
            walk(t.right, base + t.left.leaf_count, path + "1")

        walk(tree, 0, "")
        return owners

    up_gap, lo_gap = gap_owner(p.source), gap_owner(p.target)
    for gap in range(1, n):
        x = (gap - 0.5) * _SCALE
        ux, uy = positions[(False, up_gap[gap])]
        lx, ly = positions[(True, lo_gap[gap])]
        body.append(
            f'<path d="M {ux:.1f} {uy:.1f} Q {x:.1f} 0 {lx:.1f} {ly:.1f}" '
            'fill="none" stroke="green" stroke-width="1.5"/>'
        )
    rx_up = positions[(False, "")]
    rx_lo = positions[(True, "")]
    left = -1.2 * _SCALE
    body.append(
        f'<path d="M {rx_up[0]:.1f} {rx_up[1]:.1f} C {left:.1f} {rx_up[1]:.1f} '
        f'{left:.1f} {rx_lo[1]:.1f} {rx_lo[0]:.1f} {rx_lo[1]:.1f}" '
        'fill="none" stroke="green" stroke-width="1.5"/>'
    )
    depth = _SCALE * (n + 1)
    return _wrap(body, left, -depth, n * _SCALE, depth)
