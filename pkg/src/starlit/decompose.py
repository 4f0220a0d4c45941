"""Structural decompositions: blocks, supergraph completion, matchings,
2-factors and spanning cacti.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InputError, InternalInvariantError
from .multigraph import EdgeId, Multigraph


@dataclass(frozen=True)
class BlockStructure:
    """Biconnected decomposition.

    ``block_tree[i]`` lists the cut vertices lying in block ``i``; the
    bipartite block/cut-vertex tree is recovered from it (see
    :meth:`cut_blocks`).
    """

    bridges: frozenset[EdgeId]
    blocks: tuple[frozenset[EdgeId], ...]
    cut_vertices: frozenset[int]
    block_tree: tuple[tuple[int, ...], ...]

    def cut_blocks(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {v: [] for v in sorted(self.cut_vertices)}
        for i, cuts in enumerate(self.block_tree):
            for v in cuts:
                out[v].append(i)
        return out

    def leaf_blocks(self) -> list[int]:
        return [i for i, cuts in enumerate(self.block_tree) if len(cuts) == 1]


def block_decomposition(g: Multigraph) -> BlockStructure:
    """Bridges, blocks and cut vertices by an iterative Hopcroft-Tarjan DFS.

    Parallel edges are treated as distinct, so a parallel pair forms a block
    of its own and is never a bridge.
    """
    n = g.vertex_count
    disc = [-1] * n
    low = [0] * n
    timer = 0
    blocks: list[frozenset[EdgeId]] = []
    bridges: set[EdgeId] = set()
    cuts: set[int] = set()

    for root in range(n):
        if disc[root] != -1 or not g.incident(root):
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.incident(root)))]
        edge_stack: list[EdgeId] = []
        while stack:
            v, parent_edge, it = stack[-1]
            descended = False
            for f in it:
                if f == parent_edge:
                    continue
                w = g.other(f, v)
                if disc[w] == -1:
                    edge_stack.append(f)
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, f, iter(g.incident(w))))
                    descended = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append(f)
                    low[v] = min(low[v], disc[w])
            if descended:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
                block = []
                while True:
                    f = edge_stack.pop()
                    block.append(f)
                    if f == parent_edge:
                        break
                if len(block) == 1:
                    bridges.add(parent_edge)
                blocks.append(frozenset(block))
        if root_children >= 2:
            cuts.add(root)

    blocks.sort(key=min)
    tree = []
    for block in blocks:
        verts = {x for f in block for x in g.endpoints[f]}
        tree.append(tuple(sorted(verts & cuts)))
    return BlockStructure(frozenset(bridges), tuple(blocks), frozenset(cuts), tuple(tree))


def find_bridges(g: Multigraph) -> frozenset[EdgeId]:
    return block_decomposition(g).bridges


@dataclass(frozen=True)
class SupergraphResult:
    graph: Multigraph
    added_edges: frozenset[EdgeId]


def build_supergraph(g: Multigraph) -> SupergraphResult:
    """Join degree-2 vertices in pairs until at most one of them is left.

    Vertices are paired in ascending index order; the new edges get the ids
    following the original ones and may be parallel to existing edges.
    """
    degrees = g.degrees()
    if g.vertex_count == 0:
        raise InputError("supergraph of an empty graph")
    if any(d > 3 for d in degrees):
        raise InputError("supergraph needs a subcubic graph")
    if any(d < 2 for d in degrees):
        raise InputError("supergraph needs minimum degree 2")
    if not g.is_connected():
        raise InputError("supergraph needs a connected graph")
    twos = [v for v, d in enumerate(degrees) if d == 2]
    pairs = [(twos[i], twos[i + 1]) for i in range(0, len(twos) - 1, 2)]
    graph = g.with_added_edges(pairs)
    added = frozenset(range(g.edge_count, graph.edge_count))
    return SupergraphResult(graph, added)


def _simple_quotient(g: Multigraph) -> tuple[list[list[int]], dict[tuple[int, int], EdgeId]]:
    rep: dict[tuple[int, int], EdgeId] = {}
    for e, (u, v) in enumerate(g.endpoints):
        key = (min(u, v), max(u, v))
        if key not in rep:
            rep[key] = e
    adj: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u, v in sorted(rep):
        adj[u].append(v)
        adj[v].append(u)
    return adj, rep


def _edmonds(n: int, adj: list[list[int]]) -> list[int]:
    """Maximum-cardinality matching by Edmonds' blossom shrinking.

    Returns the mate array (``-1`` for exposed vertices).
    """
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break

    def find_augmenting(root: int) -> tuple[int, list[int]]:
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] == -1:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    b = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, b, to, blossom)
                    mark_path(to, b, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = b
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to, parent
                    used[match[to]] = True
                    queue.append(match[to])
        return -1, parent

    for root in range(n):
        if match[root] != -1 or not adj[root]:
            continue
        end, parent = find_augmenting(root)
        while end != -1:
            pv = parent[end]
            nxt = match[pv]
            match[end], match[pv] = pv, end
            end = nxt
    return match


def maximum_matching(g: Multigraph) -> frozenset[EdgeId]:
    """Maximum-cardinality matching; parallel classes are represented by
    their least edge id."""
    adj, rep = _simple_quotient(g)
    mate = _edmonds(g.vertex_count, adj)
    return frozenset(rep[(v, w)] for v, w in enumerate(mate) if v < w)


def is_matching(g: Multigraph, edges) -> bool:
    seen: set[int] = set()
    for e in edges:
        u, v = g.endpoints[e]
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def petersen_cover_matching(g: Multigraph) -> frozenset[EdgeId]:
    """Matching covering every degree-3 vertex of a bridgeless subcubic graph
    with at most one vertex of lower degree (that vertex has degree 2 and is
    left exposed)."""
    degrees = g.degrees()
    if g.vertex_count == 0 or any(d > 3 for d in degrees):
        raise InputError("cover matching needs a nonempty subcubic graph")
    low = [v for v, d in enumerate(degrees) if d < 3]
    if len(low) > 1 or any(degrees[v] != 2 for v in low):
        raise InputError("cover matching allows one vertex of degree 2 and no lower degrees")
    if not g.is_connected():
        raise InputError("cover matching needs a connected graph")
    if find_bridges(g):
        raise InputError("cover matching needs a bridgeless graph")
    if low:
        exposed = low[0]
        keep = [e for e in g.edges() if exposed not in g.endpoints[e]]
        sub, edge_map, vertex_map = g.edge_subgraph(keep)
        matching = frozenset(edge_map[e] for e in maximum_matching(sub))
    else:
        matching = maximum_matching(g)
    covered = {x for e in matching for x in g.endpoints[e]}
    missed = [v for v, d in enumerate(degrees) if d == 3 and v not in covered]
    if missed:
        raise InternalInvariantError(
            f"matching of size {len(matching)} leaves degree-3 vertex {missed[0]} exposed")
    return matching


def two_factor(g: Multigraph, m) -> list[tuple[EdgeId, ...]]:
    """Cycles of ``g`` minus ``m``, each listed in traversal order.

    Cycles are ordered by their smallest vertex, and each starts at that
    vertex along its smaller incident edge.
    """
    removed = set(m)
    rest: list[list[EdgeId]] = [[] for _ in range(g.vertex_count)]
    for e in g.edges():
        if e not in removed:
            u, v = g.endpoints[e]
            rest[u].append(e)
            rest[v].append(e)
    for v, inc in enumerate(rest):
        if len(inc) != 2:
            raise InternalInvariantError(
                f"vertex {v} has degree {len(inc)} after removing the matching")
    seen = [False] * g.vertex_count
    cycles = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        cycle = []
        v, e = start, min(rest[start])
        while True:
            seen[v] = True
            cycle.append(e)
            v = g.other(e, v)
            if v == start:
                break
            a, b = rest[v]
            e = b if a == e else a
            if seen[v]:
                raise InternalInvariantError(f"component through vertex {start} is not a cycle")
        cycles.append(tuple(cycle))
    return cycles


@dataclass(frozen=True)
class CactusDecomposition:
    cycles: tuple[tuple[EdgeId, ...], ...]
    connectors: frozenset[EdgeId]
    leftover_matching: frozenset[EdgeId]

    def cactus_edges(self) -> set[EdgeId]:
        out = set(self.connectors)
        for cycle in self.cycles:
            out.update(cycle)
        return out


def spanning_cactus(g: Multigraph, cycles, m) -> CactusDecomposition:
    """Join the 2-factor cycles into a spanning cactus using matching edges.

    Matching edges are scanned in ascending id order; an edge becomes a
    connector when it merges two different groups of cycles (Kruskal on the
    contracted graph), otherwise it stays in the leftover matching.
    """
    owner = {}
    for i, cycle in enumerate(cycles):
        for e in cycle:
            for x in g.endpoints[e]:
                owner[x] = i
    parent = list(range(len(cycles)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    connectors, leftover = set(), set()
    for e in sorted(m):
        u, v = g.endpoints[e]
        a, b = find(owner[u]), find(owner[v])
        if a != b:
            parent[a] = b
            connectors.add(e)
        else:
            leftover.add(e)
    if len({find(i) for i in range(len(cycles))}) > 1:
        raise InternalInvariantError("cycles of the 2-factor cannot be joined by matching edges")
    return CactusDecomposition(tuple(tuple(c) for c in cycles), frozenset(connectors),
                               frozenset(leftover))
