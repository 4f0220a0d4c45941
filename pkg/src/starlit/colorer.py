"""Constructive star list edge-coloring of subcubic multigraphs from lists of
seven colors.

Outline of :func:`star_edge_color_list`, per connected component:

1. Peel edges at degree-1 vertices until the minimum degree is 2.  Peeled
   edges are colored last, in reverse order, each avoiding the colors on the
   (at most six) edges within distance 2.
2. A bare cycle is colored directly.  Otherwise degree-2 vertices are paired
   by new edges (the supergraph); new edges get private colors that appear
   in no other list.
3. If the supergraph has a bridge, split off a leaf block whose vertices all
   have degree 3 and continue with the rest.  On the way back the bridge
   avoids the colors within distance 2 on the already colored side, and its
   color is removed from the block edges within distance 2 of it.
4. A bridgeless piece is colored through a cover matching: the 2-factor
   cycles are joined into a spanning cactus, the leftover matching edges
   are colored first, then the connectors, then every cycle.
"""

from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from typing import Mapping

from .cycles import CycleInstance, color_cycle
from .decompose import (CactusDecomposition, block_decomposition, build_supergraph,
                        petersen_cover_matching, spanning_cactus, two_factor)
from .errors import InputError, InternalInvariantError
from .multigraph import EdgeId, Multigraph
from .verifier import EdgeColoring, find_violation, respects_lists

log = logging.getLogger(__name__)

LIST_SIZE = 7

WorkingLists = dict[EdgeId, frozenset[int]]


@dataclass
class BodyTrace:
    """Snapshot of one bridgeless piece as it went through the staged coloring.

    Edge ids are local to ``graph``; ``edge_map`` translates them to the ids
    used by the driver (original edges first, then added ones).
    """

    graph: Multigraph
    edge_map: list[EdgeId]
    lists: WorkingLists
    matching: frozenset[EdgeId] = frozenset()
    cactus: CactusDecomposition | None = None
    after_matching: WorkingLists = field(default_factory=dict)
    after_connectors: WorkingLists = field(default_factory=dict)
    coloring: EdgeColoring = field(default_factory=dict)


def prune_lists(W: Mapping[EdgeId, frozenset[int]], newly_colored: Mapping[EdgeId, int],
                g: Multigraph) -> WorkingLists:
    """Drop newly colored edges from ``W`` and remove their colors from every
    remaining edge within distance 2."""
    out: WorkingLists = {}
    for e, colors in W.items():
        if e in newly_colored:
            continue
        near = g.edges_within_distance(e, 2)
        out[e] = frozenset(colors) - {newly_colored[f] for f in near if f in newly_colored}
    return out


def greedy_color_matching(mprime, W: Mapping[EdgeId, frozenset[int]],
                          g: Multigraph) -> EdgeColoring:
    """Least available color per edge, in ascending id order, keeping matching
    edges within distance 2 of each other distinct."""
    col: EdgeColoring = {}
    for e in sorted(mprime):
        near = g.edges_within_distance(e, 2)
        avail = W[e] - {col[f] for f in near if f in col}
        if not avail:
            raise InternalInvariantError(f"leftover matching edge {e} ran out of colors")
        col[e] = min(avail)
    return col


def _union_ok(cycle, rem: Mapping[EdgeId, set[int]], near: set[EdgeId], color: int) -> bool:
    union: set[int] = set()
    for f in cycle:
        union |= (rem[f] - {color}) if f in near else rem[f]
    return len(union) >= 4


def color_connectors(cactus: CactusDecomposition, W: Mapping[EdgeId, frozenset[int]],
                     g: Multigraph) -> EdgeColoring:
    """Color connectors one by one in ascending id order.

    ``W`` holds the lists of all uncolored cactus edges.  A candidate color
    is rejected when removing it from the nearby edges of some 5-cycle would
    shrink the union of that cycle's lists below 4.
    """
    rem = {e: set(colors) for e, colors in W.items()}
    fives = [cycle for cycle in cactus.cycles if len(cycle) == 5]
    col: EdgeColoring = {}
    for c in sorted(cactus.connectors):
        near = g.edges_within_distance(c, 2)
        touched = [cycle for cycle in fives if not near.isdisjoint(cycle)]
        chosen = next((x for x in sorted(rem[c])
                       if all(_union_ok(cycle, rem, near, x) for cycle in touched)), None)
        if chosen is None:
            raise InternalInvariantError(
                f"connector {c}: every color in {sorted(rem[c])} breaks a 5-cycle union")
        col[c] = chosen
        del rem[c]
        for f in near:
            if f in rem:
                rem[f].discard(chosen)
    return col


def _cycle_order(g: Multigraph) -> tuple[EdgeId, ...] | None:
    """Edges of ``g`` in traversal order if ``g`` is a single cycle."""
    if g.edge_count < 2 or any(d != 2 for d in g.degrees()) or not g.is_connected():
        return None
    return two_factor(g, ())[0]


def _check_stage(cactus: CactusDecomposition, rem: WorkingLists, stage: str,
                 check_fives: bool) -> None:
    for e, colors in rem.items():
        if len(colors) < 3:
            raise InternalInvariantError(f"{stage}: edge {e} keeps only {sorted(colors)}")
    if check_fives:
        for cycle in cactus.cycles:
            if len(cycle) == 5 and len(frozenset().union(*(rem[f] for f in cycle))) < 4:
                raise InternalInvariantError(f"{stage}: 5-cycle {cycle} spans fewer than 4 colors")


def color_two_connected_body(b: Multigraph, W: Mapping[EdgeId, frozenset[int]],
                             trace: BodyTrace | None = None) -> EdgeColoring:
    """Star coloring of a bridgeless subcubic graph with at most one vertex of
    degree 2, from lists that are 7-lists possibly reduced by one color
    near a single bridge."""
    lists = {e: frozenset(W[e]) for e in b.edges()}
    order = _cycle_order(b)
    if order is not None:
        colors = color_cycle(CycleInstance(lists[e] for e in order))
        coloring = dict(zip(order, colors))
    else:
        matching = petersen_cover_matching(b)
        cactus = spanning_cactus(b, two_factor(b, matching), matching)
        coloring = greedy_color_matching(cactus.leftover_matching, lists, b)
        rem = prune_lists(lists, coloring, b)
        if trace is not None:
            trace.matching = matching
            trace.cactus = cactus
            trace.after_matching = dict(rem)
        _check_stage(cactus, rem, "after leftover matching", check_fives=False)
        connectors = color_connectors(cactus, rem, b)
        coloring.update(connectors)
        rem = prune_lists(rem, connectors, b)
        if trace is not None:
            trace.after_connectors = dict(rem)
        _check_stage(cactus, rem, "after connectors", check_fives=True)
        for cycle in cactus.cycles:
            colors = color_cycle(CycleInstance(rem[e] for e in cycle))
            coloring.update(zip(cycle, colors))
    viol = find_violation(b, coloring)
    if viol is not None or not respects_lists(coloring, lists):
        raise InternalInvariantError(f"bridgeless piece failed verification: {viol}")
    if trace is not None:
        trace.coloring = dict(coloring)
    return coloring


def strip_pendant_edges(g: Multigraph, L=None) -> tuple[frozenset[EdgeId], list[EdgeId]]:
    """Repeatedly remove an edge at a degree-1 vertex.

    Returns the remaining (core) edge ids and the removal order.  Among
    available pendant edges the one at the smallest leaf vertex goes first.
    ``L`` is accepted for symmetry with the driver and not consulted.
    """
    deg = g.degrees()
    alive = set(g.edges())
    heap = [v for v, d in enumerate(deg) if d == 1]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        if deg[v] != 1:
            continue
        e = next(f for f in g.incident(v) if f in alive)
        alive.discard(e)
        order.append(e)
        deg[v] -= 1
        w = g.other(e, v)
        deg[w] -= 1
        if deg[w] == 1:
            heapq.heappush(heap, w)
    return frozenset(alive), order


class _Pool:
    """Edges of the input plus every edge added by supergraph completion."""

    def __init__(self, g: Multigraph, lists: Mapping[EdgeId, frozenset[int]]):
        self.vertex_count = g.vertex_count
        self.endpoints = list(g.endpoints)
        self.lists = [frozenset(lists[e]) for e in g.edges()]
        self.original = g.edge_count
        self._fresh = 1 + max((c for x in self.lists for c in x), default=0)

    def add_edge(self, u: int, v: int) -> EdgeId:
        self.endpoints.append((u, v))
        self.lists.append(frozenset(range(self._fresh, self._fresh + LIST_SIZE)))
        self._fresh += LIST_SIZE
        return len(self.endpoints) - 1

    def subgraph(self, edges) -> tuple[Multigraph, list[EdgeId], list[int]]:
        edge_map = sorted(edges)
        vertex_map = sorted({x for e in edge_map for x in self.endpoints[e]})
        local = {v: i for i, v in enumerate(vertex_map)}
        g = Multigraph(len(vertex_map), tuple((local[self.endpoints[e][0]], local[self.endpoints[e][1]])
                                              for e in edge_map))
        return g, edge_map, vertex_map


class _Run:
    def __init__(self, pool: _Pool, trace: list | None):
        self.pool = pool
        self.trace = trace
        self.coloring: EdgeColoring = {}
        self.stages: list[str] = []

    def _forbidden_near(self, edges, e: EdgeId) -> set[int]:
        g, emap, _ = self.pool.subgraph(edges)
        local = emap.index(e)
        return {self.coloring[emap[f]] for f in g.edges_within_distance(local, 2)
                if emap[f] in self.coloring}

    def _pick_bridge_color(self, edges, e: EdgeId) -> int:
        avail = self.pool.lists[e] - self._forbidden_near(edges, e)
        if not avail:
            raise InternalInvariantError(f"edge {e} has no color left after distance-2 exclusions")
        return min(avail)

    def _color_body(self, edges, W: Mapping[EdgeId, frozenset[int]]) -> None:
        g, emap, _ = self.pool.subgraph(edges)
        local_lists = {i: frozenset(W[e]) for i, e in enumerate(emap)}
        record = None
        if self.trace is not None:
            record = BodyTrace(g, emap, dict(local_lists))
        col = color_two_connected_body(g, local_lists, record)
        if record is not None and record.cactus is not None:
            self.trace.append(record)
        for i, c in col.items():
            self.coloring[emap[i]] = c

    def color_component(self, edges: frozenset[EdgeId]) -> None:
        pool = self.pool
        frames: list[tuple] = []
        current = frozenset(edges)
        depth = 0
        while current:
            g, emap, vmap = pool.subgraph(current)
            core_local, peeled_local = strip_pendant_edges(g)
            peeled = [emap[e] for e in peeled_local]
            core = frozenset(emap[e] for e in core_local)
            frames.append(("peel", current, peeled))
            self.stages.append(f"level {depth}: {len(current)} edges, peeled {len(peeled)}")
            if not core:
                break
            cg, cmap, cvmap = pool.subgraph(core)
            if _cycle_order(cg) is not None:
                frames.append(("body", core))
                self.stages.append(f"level {depth}: bare {len(core)}-cycle")
                break
            sup = build_supergraph(cg)
            added = [pool.add_edge(cvmap[u], cvmap[v])
                     for u, v in (sup.graph.endpoints[e] for e in sorted(sup.added_edges))]
            level = core | frozenset(added)
            lg, lmap, lvmap = pool.subgraph(level)
            blocks = block_decomposition(lg)
            self.stages.append(f"level {depth}: supergraph +{len(added)} edges, "
                               f"{len(blocks.blocks)} blocks, {len(blocks.bridges)} bridges")
            if not blocks.bridges:
                frames.append(("body", level))
                break
            deg = lg.degrees()
            leaf = None
            for i in blocks.leaf_blocks():
                verts = {x for f in blocks.blocks[i] for x in lg.endpoints[f]}
                if all(deg[x] == 3 for x in verts):
                    leaf = i
                    break
            if leaf is None:
                raise InternalInvariantError("no leaf block with all vertices of degree 3")
            cut = blocks.block_tree[leaf][0]
            block = blocks.blocks[leaf]
            bridge = next(f for f in lg.incident(cut) if f not in block)
            if bridge not in blocks.bridges:
                raise InternalInvariantError(f"edge {lmap[bridge]} at a leaf block is not a bridge")
            block_edges = frozenset(lmap[f] for f in block)
            frames.append(("block", level, block_edges, lmap[bridge]))
            self.stages.append(f"level {depth}: split leaf block of {len(block)} edges "
                               f"at bridge {lmap[bridge]}")
            current = level - block_edges - {lmap[bridge]}
            depth += 1

        for frame in reversed(frames):
            kind = frame[0]
            if kind == "body":
                edges_ = frame[1]
                self._color_body(edges_, {e: pool.lists[e] for e in edges_})
            elif kind == "block":
                _, level, block_edges, bridge = frame
                color = self._pick_bridge_color(level - block_edges, bridge)
                self.coloring[bridge] = color
                lg, lmap, _ = pool.subgraph(level)
                near = {lmap[f] for f in lg.edges_within_distance(lmap.index(bridge), 2)}
                W = {e: pool.lists[e] - {color} if e in near else pool.lists[e]
                     for e in block_edges}
                self._color_body(block_edges, W)
            else:
                _, at_strip, peeled = frame
                present = set(at_strip) - set(peeled)
                for e in reversed(peeled):
                    present.add(e)
                    self.coloring[e] = self._pick_bridge_color(present, e)


def _validate(g: Multigraph, L: Mapping[EdgeId, frozenset[int]]) -> None:
    if not g.is_subcubic():
        raise InputError(f"graph has maximum degree {g.max_degree()}, expected at most 3")
    extra = set(L) - set(g.edges())
    if extra:
        raise InputError(f"lists given for unknown edges {sorted(extra)[:5]}")
    for e in g.edges():
        if e not in L:
            raise InputError(f"edge {e} has no list")
        if len(set(L[e])) < LIST_SIZE:
            raise InputError(f"edge {e} has a list of size {len(set(L[e]))}, need {LIST_SIZE}")


def star_edge_color_list(g: Multigraph, L: Mapping[EdgeId, frozenset[int]],
                         trace: list[BodyTrace] | None = None) -> EdgeColoring:
    """Star edge-coloring of the subcubic multigraph ``g`` with ``c(e) in L[e]``.

    Every list must hold at least seven colors.  Choices are deterministic
    (least admissible color everywhere).  When ``trace`` is a list, one
    :class:`BodyTrace` is appended per bridgeless piece that went through the
    matching/cactus stages.
    """
    _validate(g, L)
    run = _Run(_Pool(g, L), trace)
    try:
        for comp in g.connected_components():
            vs = set(comp)
            edges = frozenset(e for e in g.edges() if g.endpoints[e][0] in vs)
            if edges:
                run.color_component(edges)
        coloring = {e: run.coloring[e] for e in g.edges()}
        viol = find_violation(g, coloring)
        if viol is not None or not respects_lists(coloring, L):
            raise InternalInvariantError(f"final coloring failed verification: {viol}")
    except InternalInvariantError as exc:
        exc.bundle.setdefault("graph", g)
        exc.bundle.setdefault("lists", {e: frozenset(L[e]) for e in g.edges()})
        exc.bundle.setdefault("stages", list(run.stages))
        log.error("internal invariant failure: %s", exc)
        raise
    return coloring
