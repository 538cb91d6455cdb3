"""Strand diagrams and their annular closures: the conjugacy engine.

A strand diagram is a planar DAG in a square with one source on the top
edge, one sink on the bottom, and otherwise trivalent vertices that are
splits (one in, two ordered outs) or merges (two ordered ins, one out).
A tree pair becomes a strand diagram by directing the source tree's edges
downward (splits) and the target tree's upward-flipped edges (merges),
gluing at the leaves.  Concatenation glues sink to source and realizes
multiplication.

Identifying the top and bottom of the square turns a strand diagram into
an annular one.  Three reductions apply in the annulus:

  I   a split whose two outputs feed the matching inputs of one merge,
      with the bigon bounding a disk, collapses to a single edge;
  II  an edge from a merge into a split is replaced by two strands joining
      the merge's inputs to the split's outputs in order;
  III two radially adjacent free loops merge into one.

The unique reduced form is a complete conjugacy invariant, as an embedded
diagram: the abstract graph alone is not enough (non-conjugate elements
can share it), so the embedding is tracked exactly.  Every strand flows
counterclockwise, so each edge meets a fixed radial cut in finitely many
positive crossings; edges carry their ordered crossing tokens and the
diagram carries the radial order of all tokens.  Moves splice and
duplicate tokens locally, the type I disk test is "equal token counts"
(parallel strands then cross in adjacent pairs, which is asserted), and a
chain that closes on itself becomes a free loop with exactly one token.

The canonical code quotients exactly the remaining freedom, rotation of
the annulus: per connected component it minimizes, over starting edges, a
traversal signature of the typed digraph together with spanning-tree
gauge-reduced windings and the identities of the two marked faces (the
face containing the hole and the outer face, recovered from the rotation
system that the vertex types force: split ccw = (in, L, R), merge ccw =
(out, R, L)).  Components and free loops are listed in their radial
nesting order, which is part of the isotopy class.
"""

from __future__ import annotations

import json
from functools import cmp_to_key
from random import Random

from .pairs import TreePair

__all__ = [
    "StrandDiagram",
    "AnnularStrandDiagram",
    "strand_from_pair",
    "concatenate",
    "annular_closure",
    "reduce_annular",
    "canonical_code",
    "are_conjugate",
    "component_count",
    "annular_of",
    "reduced_annular_of",
]

SPLIT = "split"
MERGE = "merge"
SOURCE = "source"
SINK = "sink"

_SLOTS = {
    SPLIT: ("in", "L", "R"),
    MERGE: ("L", "R", "out"),
    SOURCE: ("out",),
    SINK: ("in",),
}

# counterclockwise rotation of the three edge ends around a vertex
_ROTATION = {
    SPLIT: {"in": "L", "L": "R", "R": "in"},
    MERGE: {"out": "R", "R": "L", "L": "out"},
    SOURCE: {"out": "out"},
    SINK: {"in": "in"},
}

_SRC_SLOTS = {"L", "R", "out"}  # slots where an edge leaves its vertex


class _Net:
    """Mutable split/merge network with exact cut-crossing bookkeeping."""

    def __init__(self):
        self.kind: dict[int, str] = {}
        # eid -> [src_vid, src_slot, dst_vid, dst_slot, tokens]
        self.edges: dict[int, list] = {}
        self.att: dict[tuple[int, str], int] = {}
        self.loop_tokens: list[int] = []  # one token per free loop
        self.cut_order: list[int] = []  # token ids, innermost first
        self._next_v = 0
        self._next_e = 0
        self._next_t = 0

    # -- construction -------------------------------------------------------

    def add_vertex(self, kind: str) -> int:
        vid = self._next_v
        self._next_v += 1
        self.kind[vid] = kind
        return vid

    def add_edge(self, src_vid, src_slot, dst_vid, dst_slot, tokens=()) -> int:
        eid = self._next_e
        self._next_e += 1
        self.edges[eid] = [src_vid, src_slot, dst_vid, dst_slot, list(tokens)]
        self.att[(src_vid, src_slot)] = eid
        self.att[(dst_vid, dst_slot)] = eid
        return eid

    def new_token(self) -> int:
        tid = self._next_t
        self._next_t += 1
        return tid

    def copy(self) -> "_Net":
        out = _Net()
        out.kind = dict(self.kind)
        out.edges = {e: rec[:4] + [list(rec[4])] for e, rec in self.edges.items()}
        out.att = dict(self.att)
        out.loop_tokens = list(self.loop_tokens)
        out.cut_order = list(self.cut_order)
        out._next_v = self._next_v
        out._next_e = self._next_e
        out._next_t = self._next_t
        return out

    def _remove_vertex(self, vid: int) -> None:
        for slot in _SLOTS[self.kind[vid]]:
            self.att.pop((vid, slot), None)
        del self.kind[vid]

    def _drop_edge(self, eid: int) -> None:
        rec = self.edges.pop(eid)
        for key in ((rec[0], rec[1]), (rec[2], rec[3])):
            if self.att.get(key) == eid:
                del self.att[key]

    def _resolve_connectors(self, connectors: list[list]) -> None:
        """Splice edge chains through removed vertices.

        Each connector [ein, eout, tokens] joins the loose dst end of
        ``ein`` to the loose src end of ``eout``, inserting the corridor's
        cut crossings; a chain that closes on itself becomes a free loop.
        """
        for k, (ein, eout, tokens) in enumerate(connectors):
            if ein == eout:
                loop = self.edges[ein][4] + tokens
                if len(loop) != 1:
                    raise AssertionError("free loop must cross the cut exactly once")
                self.loop_tokens.append(loop[0])
                self._drop_edge(ein)
                continue
            keep, gone = self.edges[ein], self.edges[eout]
            keep[2], keep[3] = gone[2], gone[3]
            keep[4] = keep[4] + tokens + gone[4]
            del self.edges[eout]
            self.att[(keep[2], keep[3])] = ein
            for later in connectors[k + 1 :]:
                if later[0] == eout:
                    later[0] = ein

    # -- reduction moves ----------------------------------------------------

    def bigon_moves(self) -> list[int]:
        """Splits whose outputs feed one merge in order, bounding a disk
        (the parallel strands cross the cut equally often)."""
        out = []
        for vid, kind in self.kind.items():
            if kind != SPLIT:
                continue
            el = self.att[(vid, "L")]
            er = self.att[(vid, "R")]
            rl, rr = self.edges[el], self.edges[er]
            if (
                rl[2] == rr[2]
                and self.kind.get(rl[2]) == MERGE
                and rl[3] == "L"
                and rr[3] == "R"
                and len(rl[4]) == len(rr[4])
            ):
                out.append(vid)
        return sorted(out)

    def pass_moves(self) -> list[int]:
        """Edges running from a merge into a split."""
        return sorted(
            eid
            for eid, rec in self.edges.items()
            if self.kind.get(rec[0]) == MERGE and self.kind.get(rec[2]) == SPLIT
        )

    def apply_bigon(self, split_vid: int) -> None:
        el = self.att[(split_vid, "L")]
        er = self.att[(split_vid, "R")]
        merge_vid = self.edges[el][2]
        left_tokens = self.edges[el][4]
        right_tokens = self.edges[er][4]
        pos = {t: i for i, t in enumerate(self.cut_order)}
        for tl, tr in zip(left_tokens, right_tokens):
            # the left strand of the bigon is the outer one at every wrap
            if pos[tl] != pos[tr] + 1:
                raise AssertionError("bigon strands must cross the cut adjacently")
        self.cut_order = [t for t in self.cut_order if t not in set(left_tokens)]
        ein = self.att[(split_vid, "in")]
        eout = self.att[(merge_vid, "out")]
        corridor = list(right_tokens)
        self._drop_edge(el)
        self._drop_edge(er)
        self._remove_vertex(split_vid)
        self._remove_vertex(merge_vid)
        self._resolve_connectors([[ein, eout, corridor]])

    def apply_pass(self, eid: int) -> None:
        merge_vid, _, split_vid, _, tokens = self.edges[eid]
        left_copies, right_copies = [], []
        for t in tokens:
            # the two replacement strands run in parallel where the edge
            # was; the left one is outer at every cut crossing
            inner, outer = self.new_token(), self.new_token()
            right_copies.append(inner)
            left_copies.append(outer)
            p = self.cut_order.index(t)
            self.cut_order[p : p + 1] = [inner, outer]
        left = [self.att[(merge_vid, "L")], self.att[(split_vid, "L")], left_copies]
        right = [self.att[(merge_vid, "R")], self.att[(split_vid, "R")], right_copies]
        self._drop_edge(eid)
        self._remove_vertex(merge_vid)
        self._remove_vertex(split_vid)
        self._resolve_connectors([left, right])

    def merge_parallel_loops(self) -> None:
        """Type III: collapse runs of radially adjacent free loops."""
        if len(self.loop_tokens) < 2:
            return
        order = self.radial_items()
        drop: set[int] = set()
        prev_loop_token = None
        for kind, payload in order:
            if kind == "loop":
                if prev_loop_token is not None:
                    drop.add(payload)
                prev_loop_token = payload
            else:
                prev_loop_token = None
        if drop:
            self.loop_tokens = [t for t in self.loop_tokens if t not in drop]
            self.cut_order = [t for t in self.cut_order if t not in drop]

    def reduce(self, annular: bool, rng: Random | None = None) -> None:
        while True:
            moves = [("I", v) for v in self.bigon_moves()]
            moves += [("II", e) for e in self.pass_moves()]
            if not moves:
                break
            kind, key = rng.choice(moves) if rng is not None else moves[0]
            if kind == "I":
                self.apply_bigon(key)
            else:
                self.apply_pass(key)
        if annular:
            self.merge_parallel_loops()

    # -- embedding: faces and radial nesting --------------------------------

    def _face_orbits(self) -> dict[tuple[int, int], int]:
        """Map darts (eid, end) to face ids; end 0 = src side, 1 = dst side.

        Faces are orbits of sigma(alpha(dart)); the orbit of a dart is the
        face on the left of that dart when it points away from its vertex,
        so an edge's dst dart carries the face on the inner side of its cut
        crossings (the flow is counterclockwise there).
        """
        face_of: dict[tuple[int, int], int] = {}
        next_face = 0
        for start in sorted(self.edges):
            for end in (0, 1):
                if (start, end) in face_of:
                    continue
                dart = (start, end)
                while dart not in face_of:
                    face_of[dart] = next_face
                    eid, e = dart
                    rec = self.edges[eid]
                    # alpha: jump to the other end of the edge
                    vid, slot = (rec[2], rec[3]) if e == 0 else (rec[0], rec[1])
                    # sigma: rotate counterclockwise at that vertex
                    nslot = _ROTATION[self.kind[vid]][slot]
                    neid = self.att[(vid, nslot)]
                    nrec = self.edges[neid]
                    nend = 0 if (nrec[0], nrec[1]) == (vid, nslot) else 1
                    dart = (neid, nend)
                next_face += 1
        return face_of

    def component_edge_sets(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for eid in sorted(self.edges):
            if eid in seen:
                continue
            comp = {eid}
            stack = [eid]
            while stack:
                rec = self.edges[stack.pop()]
                for vid in (rec[0], rec[2]):
                    for slot in _SLOTS[self.kind[vid]]:
                        nxt = self.att[(vid, slot)]
                        if nxt not in comp:
                            comp.add(nxt)
                            stack.append(nxt)
            seen |= comp
            comps.append(comp)
        return comps

    def radial_items(self) -> list[tuple[str, object]]:
        """Components and free loops sorted innermost to outermost."""
        pos = {t: i for i, t in enumerate(self.cut_order)}
        faces = self._face_orbits() if self.edges else {}
        comps = []
        for comp in self.component_edge_sets():
            token_edge = {}
            for eid in comp:
                for t in self.edges[eid][4]:
                    token_edge[t] = eid
            if not token_edge:
                raise AssertionError("a component must wind around the hole")
            ordered = sorted(token_edge, key=pos.get)
            inner_e = token_edge[ordered[0]]
            outer_e = token_edge[ordered[-1]]
            # walk the cut outward: which face of this component each gap
            # between consecutive global tokens belongs to
            gap_face = []
            current = faces[(inner_e, 1)]  # the hole face of this component
            for t in self.cut_order:
                gap_face.append(current)
                if t in token_edge:
                    eid = token_edge[t]
                    if current != faces[(eid, 1)]:
                        raise AssertionError("cut walk out of step with faces")
                    current = faces[(eid, 0)]
            if current != faces[(outer_e, 0)]:
                raise AssertionError("cut walk must end in the outer face")
            comps.append(
                {
                    "edges": comp,
                    "min_pos": pos[ordered[0]],
                    "hole": faces[(inner_e, 1)],
                    "outer": faces[(outer_e, 0)],
                    "gap_face": gap_face,
                }
            )

        items = [("component", c) for c in comps]
        items += [("loop", t) for t in self.loop_tokens]

        def item_pos(item) -> int:
            return item[1]["min_pos"] if item[0] == "component" else pos[item[1]]

        def inside(item, comp) -> bool:
            return comp["gap_face"][item_pos(item)] == comp["hole"]

        def cmp(a, b) -> int:
            if a is b:
                return 0
            if a[0] == "loop" and b[0] == "loop":
                return -1 if item_pos(a) < item_pos(b) else 1
            if b[0] == "component" and inside(a, b[1]):
                return -1
            if a[0] == "component" and inside(b, a[1]):
                return 1
            if a[0] == "component" and b[0] == "component":
                raise AssertionError("disjoint winding components must nest")
            return 1 if a[0] == "loop" else -1

        return sorted(items, key=cmp_to_key(cmp))

    # -- invariants ----------------------------------------------------------

    def zero_winding_acyclic(self) -> bool:
        """Every directed cycle winds positively iff the subgraph of edges
        that never cross the cut is acyclic."""
        adj: dict[int, list[int]] = {v: [] for v in self.kind}
        for rec in self.edges.values():
            if not rec[4]:
                adj[rec[0]].append(rec[2])
        state: dict[int, int] = {}

        def visit(v: int) -> bool:
            state[v] = 1
            for w in adj[v]:
                s = state.get(w, 0)
                if s == 1 or (s == 0 and not visit(w)):
                    return False
            state[v] = 2
            return True

        return all(state.get(v, 0) == 2 or visit(v) for v in adj)

    # -- canonical form -------------------------------------------------------

    def _signature_from(self, start: int, marks: tuple[int, int] | None) -> tuple:
        edge_ix = {start: 0}
        edge_order = [start]
        vert_ix: dict[int, int] = {}
        vert_order: list[int] = []
        psi: dict[int, int] = {}
        pos = 0
        while pos < len(edge_order):
            eid = edge_order[pos]
            pos += 1
            src_v, _, dst_v, _, tokens = self.edges[eid]
            w = len(tokens)
            if src_v not in psi and dst_v not in psi:
                psi[src_v] = 0
            if src_v in psi and dst_v not in psi:
                psi[dst_v] = psi[src_v] + w
            elif dst_v in psi and src_v not in psi:
                psi[src_v] = psi[dst_v] - w
            for vid in (dst_v, src_v):
                if vid in vert_ix:
                    continue
                vert_ix[vid] = len(vert_order)
                vert_order.append(vid)
                for slot in _SLOTS[self.kind[vid]]:
                    nxt = self.att[(vid, slot)]
                    if nxt not in edge_ix:
                        edge_ix[nxt] = len(edge_order)
                        edge_order.append(nxt)
        verts = tuple(
            (
                self.kind[vid],
                tuple(edge_ix[self.att[(vid, slot)]] for slot in _SLOTS[self.kind[vid]]),
            )
            for vid in vert_order
        )
        winds = tuple(
            len(self.edges[eid][4]) + psi[self.edges[eid][0]] - psi[self.edges[eid][2]]
            for eid in edge_order
        )
        if marks is None:
            return (verts, winds)
        faces = self._face_orbits()
        mark_ids = []
        for face in marks:
            mark_ids.append(
                min(
                    (edge_ix[eid], end)
                    for (eid, end), f in faces.items()
                    if f == face and eid in edge_ix
                )
            )
        return (verts, winds, tuple(mark_ids))

    def canonical_form(self) -> tuple:
        items = []
        for kind, payload in self.radial_items():
            if kind == "loop":
                items.append("O")
            else:
                marks = (payload["hole"], payload["outer"])
                items.append(
                    min(self._signature_from(e, marks) for e in payload["edges"])
                )
        return tuple(items)


def _format_code(form: tuple, loops: int) -> str:
    parts = []
    for item in form:
        if item == "O":
            parts.append("O")
            continue
        verts, winds, marks = item
        vtxt = ";".join(f"{k[0]}:" + ",".join(map(str, ixs)) for k, ixs in verts)
        wtxt = ",".join(map(str, winds))
        mtxt = ",".join(f"{e}{'st'[d]}" for e, d in marks)
        parts.append(f"[{vtxt}|{wtxt}|{mtxt}]")
    return (" ".join(parts) if parts else "-") + f" loops={loops}"


class StrandDiagram:
    """Immutable wrapper around a square split/merge network."""

    __slots__ = ("_net", "_source", "_sink")

    def __init__(self, net: _Net, source: int, sink: int):
        self._net = net
        self._source = source
        self._sink = sink

    @property
    def split_count(self) -> int:
        return sum(1 for k in self._net.kind.values() if k == SPLIT)

    @property
    def merge_count(self) -> int:
        return sum(1 for k in self._net.kind.values() if k == MERGE)

    def canonical_signature(self) -> tuple:
        return self._net._signature_from(self._net.att[(self._source, "out")], None)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StrandDiagram)
            and self.canonical_signature() == other.canonical_signature()
        )

    def __hash__(self) -> int:
        return hash(self.canonical_signature())

    def __repr__(self) -> str:
        return f"StrandDiagram(splits={self.split_count}, merges={self.merge_count})"


class AnnularStrandDiagram:
    """Immutable wrapper around an annular split/merge network."""

    __slots__ = ("_net",)

    def __init__(self, net: _Net):
        self._net = net

    @property
    def free_loops(self) -> int:
        return len(self._net.loop_tokens)

    @property
    def split_count(self) -> int:
        return sum(1 for k in self._net.kind.values() if k == SPLIT)

    @property
    def merge_count(self) -> int:
        return sum(1 for k in self._net.kind.values() if k == MERGE)

    @property
    def is_reduced(self) -> bool:
        if self._net.bigon_moves() or self._net.pass_moves():
            return False
        probe = self._net.copy()
        probe.merge_parallel_loops()
        return len(probe.loop_tokens) == len(self._net.loop_tokens)

    def winding_condition_holds(self) -> bool:
        return self._net.zero_winding_acyclic()

    def to_json(self) -> str:
        net = self._net
        loops = set(net.loop_tokens)
        owner = {}
        for eid, rec in sorted(net.edges.items()):
            for t in rec[4]:
                owner[t] = eid
        return json.dumps(
            {
                "schema": 1,
                "vertices": [
                    {"id": v, "kind": net.kind[v],
                     "edges": {slot: net.att[(v, slot)] for slot in _SLOTS[net.kind[v]]}}
                    for v in sorted(net.kind)
                ],
                "edges": [
                    {"id": e, "src": rec[0:2], "dst": rec[2:4], "winding": len(rec[4])}
                    for e, rec in sorted(net.edges.items())
                ],
                "cut_sequence": [
                    {"edge": owner[t]} if t in owner else {"loop": True}
                    for t in net.cut_order
                    if t in owner or t in loops
                ],
                "free_loops": len(net.loop_tokens),
            }
        )

    def __repr__(self) -> str:
        return (
            f"AnnularStrandDiagram(splits={self.split_count}, "
            f"merges={self.merge_count}, free_loops={self.free_loops})"
        )


def strand_from_pair(p: TreePair) -> StrandDiagram:
    """Source tree as splits above, target tree as merges below, leaves glued."""
    net = _Net()
    source = net.add_vertex(SOURCE)
    sink = net.add_vertex(SINK)
    if p.leaf_count == 1:
        net.add_edge(source, "out", sink, "in")
        return StrandDiagram(net, source, sink)

    def build(tree, kind):
        vids = {}

        def walk(t, path):
            if t.is_leaf:
                return
            vids[path] = net.add_vertex(kind)
            walk(t.left, path + "0")
            walk(t.right, path + "1")

        walk(tree, "")
        return vids

    up = build(p.source, SPLIT)
    lo = build(p.target, MERGE)
    net.add_edge(source, "out", up[""], "in")
    net.add_edge(lo[""], "out", sink, "in")

    def leaf_attachments(tree, vids):
        # (vertex, slot) owning each leaf strand, in leaf order
        out = []

        def walk(t, path):
            for child, side in ((t.left, "L"), (t.right, "R")):
                cpath = path + ("0" if side == "L" else "1")
                if child.is_leaf:
                    out.append((vids[path], side))
                else:
                    walk(child, cpath)

        walk(tree, "")
        return out

    # internal tree edges
    def wire(tree, vids, is_split):
        def walk(t, path):
            for child, side in ((t.left, "L"), (t.right, "R")):
                cpath = path + ("0" if side == "L" else "1")
                if not child.is_leaf:
                    if is_split:
                        net.add_edge(vids[path], side, vids[cpath], "in")
                    else:
                        net.add_edge(vids[cpath], "out", vids[path], side)
                    walk(child, cpath)

        walk(tree, "")

    wire(p.source, up, True)
    wire(p.target, lo, False)
    for (uv, uslot), (lv, lslot) in zip(
        leaf_attachments(p.source, up), leaf_attachments(p.target, lo)
    ):
        net.add_edge(uv, uslot, lv, lslot)
    return StrandDiagram(net, source, sink)


def concatenate(a: StrandDiagram, b: StrandDiagram) -> StrandDiagram:
    """Glue the sink of ``a`` to the source of ``b`` and reduce."""
    net = a._net.copy()
    offset_v = net._next_v
    offset_e = net._next_e
    bn = b._net
    for vid, kind in bn.kind.items():
        net.kind[vid + offset_v] = kind
    net._next_v += bn._next_v
    for eid, rec in bn.edges.items():
        net.edges[eid + offset_e] = [rec[0] + offset_v, rec[1], rec[2] + offset_v, rec[3], []]
    for (vid, slot), eid in bn.att.items():
        net.att[(vid + offset_v, slot)] = eid + offset_e
    net._next_e += bn._next_e

    sink_a = a._sink
    source_b = b._source + offset_v
    ein = net.att[(sink_a, "in")]
    eout = net.att[(source_b, "out")]
    net._remove_vertex(sink_a)
    net._remove_vertex(source_b)
    net._resolve_connectors([[ein, eout, []]])
    net.reduce(annular=False)
    return StrandDiagram(net, a._source, b._sink + offset_v)


def annular_closure(s: StrandDiagram) -> AnnularStrandDiagram:
    """Identify top and bottom; the gluing edge crosses the cut once."""
    net = s._net.copy()
    se = net.att[(s._source, "out")]
    te = net.att[(s._sink, "in")]
    token = net.new_token()
    net.cut_order = [token]
    if se == te:
        net._remove_vertex(s._source)
        net._remove_vertex(s._sink)
        net._drop_edge(se)
        net.loop_tokens.append(token)
        return AnnularStrandDiagram(net)
    top_rec = net.edges[se]
    bot_rec = net.edges[te]
    src = (bot_rec[0], bot_rec[1])
    dst = (top_rec[2], top_rec[3])
    net._drop_edge(se)
    net._drop_edge(te)
    net._remove_vertex(s._source)
    net._remove_vertex(s._sink)
    net.add_edge(src[0], src[1], dst[0], dst[1], [token])
    return AnnularStrandDiagram(net)


def reduce_annular(
    a: AnnularStrandDiagram, rng: Random | None = None
) -> AnnularStrandDiagram:
    """Apply reductions until none fits; the result does not depend on the
    order (asserted empirically by the order-fuzzing suite)."""
    net = a._net.copy()
    net.reduce(annular=True, rng=rng)
    return AnnularStrandDiagram(net)


def canonical_code(a: AnnularStrandDiagram) -> str:
    """Printable canonical code; equal codes iff equal embedded diagrams."""
    return _format_code(a._net.canonical_form(), a.free_loops)


def component_count(a: AnnularStrandDiagram) -> int:
    """Connected components, counting each free loop as one."""
    return len(a._net.component_edge_sets()) + a.free_loops


def annular_of(p: TreePair) -> AnnularStrandDiagram:
    return annular_closure(strand_from_pair(p))


def reduced_annular_of(p: TreePair, rng: Random | None = None) -> AnnularStrandDiagram:
    return reduce_annular(annular_of(p), rng)


def are_conjugate(g: TreePair, h: TreePair) -> bool:
    """Conjugacy test: reduced annular closures have equal canonical codes."""
    return canonical_code(reduced_annular_of(g)) == canonical_code(reduced_annular_of(h))
