from __future__ import annotations

import itertools
import random

import pytest

from starlit.decompose import find_bridges
from starlit.generators import random_cubic
from starlit.multigraph import Multigraph

ACCEPTANCE_RESULTS: list[str] = []


def record_acceptance(number: int, passed: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}"
    ACCEPTANCE_RESULTS.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)


def brute_is_star(g: Multigraph, c: dict[int, int]) -> bool:
    """Star-coloring check by trying every ordered 4-tuple of distinct edges
    and every orientation of the first one."""
    for v in range(g.vertex_count):
        inc = g.incident(v)
        for a, b in itertools.combinations(inc, 2):
            if c[a] == c[b]:
                return False
    for seq in itertools.permutations(g.edges(), 4):
        if len({c[e] for e in seq}) != 2:
            continue
        for start in g.endpoints[seq[0]]:
            verts = [start]
            ok = True
            for e in seq:
                u, w = g.endpoints[e]
                if verts[-1] == u:
                    verts.append(w)
                elif verts[-1] == w:
                    verts.append(u)
                else:
                    ok = False
                    break
            if not ok:
                continue
            if len(set(verts)) == 5:
                return False
            if verts[0] == verts[4] and len(set(verts[:4])) == 4:
                return False
    return True


def brute_matching_size(g: Multigraph) -> int:
    best = 0
    for r in range(1, g.edge_count + 1):
        found = False
        for subset in itertools.combinations(g.edges(), r):
            verts = [x for e in subset for x in g.endpoints[e]]
            if len(set(verts)) == len(verts):
                found = True
                break
        if not found:
            break
        best = r
    return best


def random_multigraph(rng: random.Random, n: int, m: int, max_degree: int = 3) -> Multigraph:
    """Random loopless multigraph with degrees capped at ``max_degree``."""
    deg = [0] * n
    edges = []
    for _ in range(m * 4):
        if len(edges) == m:
            break
        u, v = rng.sample(range(n), 2)
        if deg[u] < max_degree and deg[v] < max_degree:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Multigraph(n, tuple(edges))


def random_bridgeless(rng: random.Random, n: int, allow_parallel: bool = True,
                      subdivide: bool = False) -> Multigraph:
    """Connected bridgeless cubic graph, optionally with one edge subdivided
    to create a single degree-2 vertex."""
    while True:
        g = random_cubic(n, rng, allow_parallel)
        if g.is_connected() and not find_bridges(g):
            break
    if not subdivide:
        return g
    e = rng.randrange(g.edge_count)
    u, v = g.endpoints[e]
    x = g.vertex_count
    edges = [uv for i, uv in enumerate(g.endpoints) if i != e] + [(u, x), (x, v)]
    return Multigraph(x + 1, tuple(edges))


@pytest.fixture
def rng():
    return random.Random(20240611)
