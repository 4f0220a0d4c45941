"""Loopless multigraphs with positional edge identifiers.

Edges are addressed by their index in ``Multigraph.endpoints``; parallel
edges are therefore always distinguishable, and every mapping elsewhere in
the package (colorings, lists, matchings) is keyed on that index.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InputError

EdgeId = int


@dataclass(frozen=True)
class Multigraph:
    """Immutable loopless multigraph on vertices ``0..vertex_count-1``.

    ``endpoints[i]`` is the vertex pair of edge ``i``.  Duplicate pairs are
    parallel edges.
    """

    vertex_count: int
    endpoints: tuple[tuple[int, int], ...]
    _incidence: tuple[tuple[int, ...], ...] = field(
        init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.vertex_count
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        endpoints = tuple((int(u), int(v)) for u, v in self.endpoints)
        incidence: list[list[int]] = [[] for _ in range(n)]
        for i, (u, v) in enumerate(endpoints):
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {i} ({u}, {v}) references a vertex outside 0..{n - 1}")
            if u == v:
                raise InputError(f"edge {i} is a loop at vertex {u}")
            incidence[u].append(i)
            incidence[v].append(i)
        object.__setattr__(self, "endpoints", endpoints)
        object.__setattr__(self, "_incidence", tuple(tuple(x) for x in incidence))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]]) -> Multigraph:
        return cls(vertex_count, tuple(edges))

    @property
    def edge_count(self) -> int:
        return len(self.endpoints)

    def edges(self) -> range:
        return range(len(self.endpoints))

    def _check_edge(self, e: EdgeId) -> None:
        if not 0 <= e < len(self.endpoints):
            raise InputError(f"edge id {e} out of range 0..{len(self.endpoints) - 1}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise InputError(f"vertex {v} out of range 0..{self.vertex_count - 1}")

    def incident(self, v: int) -> tuple[EdgeId, ...]:
        """Edge ids incident to ``v`` in ascending order."""
        self._check_vertex(v)
        return self._incidence[v]

    def other(self, e: EdgeId, v: int) -> int:
        u, w = self.endpoints[e]
        if v == u:
            return w
        if v == w:
            return u
        raise InputError(f"vertex {v} is not an endpoint of edge {e}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._incidence[v])

    def degrees(self) -> list[int]:
        return [len(inc) for inc in self._incidence]

    def max_degree(self) -> int:
        return max((len(inc) for inc in self._incidence), default=0)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def adjacent_edges(self, e: EdgeId) -> set[EdgeId]:
        """Edges sharing at least one endpoint with ``e`` (``e`` excluded)."""
        self._check_edge(e)
        u, v = self.endpoints[e]
        out = set(self._incidence[u])
        out.update(self._incidence[v])
        out.discard(e)
        return out

    def edges_within_distance(self, e: EdgeId, radius: int = 2) -> set[EdgeId]:
        """All edges ``f != e`` at line-graph distance at most ``radius``."""
        self._check_edge(e)
        if radius not in (1, 2):
            raise InputError(f"radius must be 1 or 2, got {radius}")
        near = self.adjacent_edges(e)
        if radius == 2:
            for f in tuple(near):
                near |= self.adjacent_edges(f)
            near.discard(e)
        return near

    def connected_components(self) -> list[list[int]]:
        """Vertex partition into components, ordered by smallest vertex."""
        seen = [False] * self.vertex_count
        components = []
        for start in range(self.vertex_count):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                x = queue.popleft()
                for f in self._incidence[x]:
                    y = self.other(f, x)
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            components.append(sorted(comp))
        return components

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def edge_subgraph(self, edge_ids: Iterable[EdgeId]) -> tuple[Multigraph, list[EdgeId], list[int]]:
        """Compact subgraph spanned by ``edge_ids``.

        Returns ``(sub, edge_map, vertex_map)`` where local edge ``i`` of
        ``sub`` is ``edge_map[i]`` here and local vertex ``j`` is
        ``vertex_map[j]``.  Local ids follow ascending order of the originals.
        """
        edge_map = sorted(set(edge_ids))
        for e in edge_map:
            self._check_edge(e)
        vertex_map = sorted({x for e in edge_map for x in self.endpoints[e]})
        local = {v: i for i, v in enumerate(vertex_map)}
        sub = Multigraph(len(vertex_map),
                         tuple((local[self.endpoints[e][0]], local[self.endpoints[e][1]])
                               for e in edge_map))
        return sub, edge_map, vertex_map

    def with_added_edges(self, pairs: Sequence[tuple[int, int]]) -> Multigraph:
        """New graph with ``pairs`` appended after the existing edge ids."""
        return Multigraph(self.vertex_count, self.endpoints + tuple(pairs))


def cycle_graph(n: int) -> Multigraph:
    """The ``n``-cycle with edge ``i`` joining vertices ``i`` and ``i+1 mod n``.

    ``n == 2`` gives a pair of parallel edges.
    """
    if n < 2:
        raise InputError(f"a cycle needs at least 2 edges, got {n}")
    return Multigraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path_graph(m: int) -> Multigraph:
    """Path with ``m`` edges; edge ``i`` joins ``i`` and ``i+1``."""
    return Multigraph(m + 1, tuple((i, i + 1) for i in range(m)))
