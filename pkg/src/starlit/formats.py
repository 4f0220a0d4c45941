"""Text formats for graphs, list assignments and colorings.

Graph::

    p <n> <m>
    e <u> <v>        (m lines, 0-based vertices; the i-th e line is edge i)

Lists: one ``l <edge_id> <c1> ... <ck>`` line per edge.
Colorings: ``c <edge_id> <color>`` lines.
Lines starting with ``#`` and blank lines are ignored everywhere.
"""

from __future__ import annotations

from typing import Iterator, Mapping

from .errors import InputError
from .multigraph import EdgeId, Multigraph


class FormatError(InputError):
    pass


def _records(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split()


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {' '.join(fields)!r}") from None


def parse_graph(text: str) -> Multigraph:
    header = None
    edges: list[tuple[int, int]] = []
    for lineno, fields in _records(text):
        tag = fields[0]
        if tag == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate 'p' line")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'p <n> <m>'")
            header = _ints(fields[1:], lineno)
        elif tag == "e":
            if header is None:
                raise FormatError(f"line {lineno}: 'e' line before 'p' line")
            if len(fields) != 3:
                raise FormatError(f"line {lineno}: expected 'e <u> <v>'")
            u, v = _ints(fields[1:], lineno)
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise FormatError(f"line {lineno}: vertex out of range 0..{header[0] - 1}")
            if u == v:
                raise FormatError(f"line {lineno}: loop at vertex {u}")
            edges.append((u, v))
        else:
            raise FormatError(f"line {lineno}: unknown record {tag!r}")
    if header is None:
        raise FormatError("missing 'p <n> <m>' line")
    n, m = header
    if n < 0 or m < 0:
        raise FormatError("negative size in 'p' line")
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges, found {len(edges)}")
    return Multigraph(n, tuple(edges))


def format_graph(g: Multigraph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    lines += [f"e {u} {v}" for u, v in g.endpoints]
    return "\n".join(lines) + "\n"


def parse_lists(text: str, edge_count: int | None = None) -> dict[EdgeId, frozenset[int]]:
    lists: dict[EdgeId, frozenset[int]] = {}
    for lineno, fields in _records(text):
        if fields[0] != "l" or len(fields) < 2:
            raise FormatError(f"line {lineno}: expected 'l <edge_id> <colors...>'")
        e, *colors = _ints(fields[1:], lineno)
        if e in lists:
            raise FormatError(f"line {lineno}: duplicate list for edge {e}")
        if edge_count is not None and not 0 <= e < edge_count:
            raise FormatError(f"line {lineno}: unknown edge {e}")
        lists[e] = frozenset(colors)
    if edge_count is not None:
        missing = [e for e in range(edge_count) if e not in lists]
        if missing:
            raise FormatError(f"no list for edge {missing[0]}")
    return lists


def format_lists(lists: Mapping[EdgeId, frozenset[int]]) -> str:
    return "".join(f"l {e} {' '.join(map(str, sorted(lists[e])))}\n" for e in sorted(lists))


def parse_coloring(text: str, edge_count: int | None = None) -> dict[EdgeId, int]:
    coloring: dict[EdgeId, int] = {}
    for lineno, fields in _records(text):
        if fields[0] != "c" or len(fields) != 3:
            raise FormatError(f"line {lineno}: expected 'c <edge_id> <color>'")
        e, color = _ints(fields[1:], lineno)
        if e in coloring:
            raise FormatError(f"line {lineno}: edge {e} colored twice")
        if edge_count is not None and not 0 <= e < edge_count:
            raise FormatError(f"line {lineno}: unknown edge {e}")
        coloring[e] = color
    return coloring


def format_coloring(coloring: Mapping[EdgeId, int]) -> str:
    return "".join(f"c {e} {coloring[e]}\n" for e in sorted(coloring))


def uniform_lists(g: Multigraph, k: int) -> dict[EdgeId, frozenset[int]]:
    palette = frozenset(range(1, k + 1))
    return {e: palette for e in g.edges()}
