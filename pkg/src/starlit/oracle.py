"""Exhaustive ground truth for small instances, plus named fixture graphs."""

from __future__ import annotations

import logging
from collections import deque
from typing import Mapping

from .errors import InputError
from .multigraph import EdgeId, Multigraph, cycle_graph
from .verifier import EdgeColoring, has_violation_through

log = logging.getLogger(__name__)

DEFAULT_MAX_EDGES = 20


def _k4() -> Multigraph:
    return Multigraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def _cube() -> Multigraph:
    return Multigraph(8, tuple((i, i ^ (1 << b)) for i in range(8) for b in range(3)
                               if i < i ^ (1 << b)))


def _petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Multigraph(10, tuple(outer + inner + spokes))


def _prism() -> Multigraph:
    return Multigraph(6, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                          (0, 3), (1, 4), (2, 5)))


NAMED_GRAPHS = {
    "c5": lambda: cycle_graph(5),
    "cube_q3": _cube,
    "k33": lambda: Multigraph(6, tuple((a, b) for a in range(3) for b in range(3, 6))),
    # K4 with edge 2-3 replaced by the path 2-4-3
    "k4_subdivided_edge": lambda: Multigraph(5, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                                 (2, 4), (4, 3))),
    "complement_c6": lambda: Multigraph(6, tuple((i, j) for i in range(6) for j in range(i + 1, 6)
                                                 if min(j - i, 6 - (j - i)) >= 2)),
    "k4": _k4,
    "petersen": _petersen,
    "prism": _prism,
    "parallel_triple": lambda: Multigraph(2, ((0, 1),) * 3),
}


def named_graph(name: str) -> Multigraph:
    try:
        return NAMED_GRAPHS[name]()
    except KeyError:
        raise InputError(f"unknown graph {name!r}; known: {', '.join(sorted(NAMED_GRAPHS))}") from None


def _search_order(g: Multigraph) -> list[EdgeId]:
    """Breadth-first order on the line graph, so each edge after the first
    of its component touches an earlier one."""
    seen = [False] * g.edge_count
    order = []
    for start in g.edges():
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            e = queue.popleft()
            order.append(e)
            for f in sorted(g.adjacent_edges(e)):
                if not seen[f]:
                    seen[f] = True
                    queue.append(f)
    return order


def _guard(g: Multigraph, max_edges: int) -> None:
    if max_edges > DEFAULT_MAX_EDGES:
        log.warning("exhaustive search guard raised to %d edges", max_edges)
    if g.edge_count > max_edges:
        raise InputError(f"{g.edge_count} edges exceed the exhaustive search guard of {max_edges}")


def exhaustive_star_color(g: Multigraph, L: Mapping[EdgeId, frozenset[int]],
                          max_edges: int = DEFAULT_MAX_EDGES,
                          symmetric: bool = False) -> EdgeColoring | None:
    """Backtracking search for a star coloring with ``c(e) in L[e]``.

    ``symmetric=True`` declares that every list is the same palette, which
    allows fixing the first edge's color and restricting the second edge to
    the first two palette colors.
    """
    _guard(g, max_edges)
    order = _search_order(g)
    lists = {e: sorted(L[e]) for e in g.edges()}
    if any(not lists[e] for e in g.edges()):
        return None
    palette = lists[order[0]] if order else []
    col: EdgeColoring = {}

    def candidates(i: int) -> list[int]:
        e = order[i]
        if symmetric and i < 2:
            return palette[:i + 1]
        return lists[e]

    def search(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        for c in candidates(i):
            col[e] = c
            if not has_violation_through(g, col, e) and search(i + 1):
                return True
            del col[e]
        return False

    return dict(col) if search(0) else None


def star_chromatic_index(g: Multigraph, max_k: int = 7,
                         max_edges: int = DEFAULT_MAX_EDGES) -> int | None:
    """Least ``k <= max_k`` admitting a star edge-coloring with colors 1..k."""
    _guard(g, max_edges)
    if g.edge_count == 0:
        return 0
    for k in range(1, max_k + 1):
        palette = frozenset(range(1, k + 1))
        if exhaustive_star_color(g, {e: palette for e in g.edges()}, max_edges,
                                 symmetric=True) is not None:
            return k
    return None
