"""Star edge-coloring predicates.

A coloring is a star edge-coloring when it is proper and no path with four
edges (five distinct vertices) and no cycle with four edges (four distinct
vertices) carries exactly two colors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import InputError
from .multigraph import EdgeId, Multigraph

EdgeColoring = dict[EdgeId, int]
ListAssignment = Mapping[EdgeId, frozenset[int]]

IMPROPER = "improper"
BICHROMATIC_PATH = "bichromatic_path"
BICHROMATIC_CYCLE = "bichromatic_cycle"


@dataclass(frozen=True, order=True)
class Violation:
    kind: str
    witness: tuple[EdgeId, ...]


def _extend(g: Multigraph, verts: list[int], edges: list[EdgeId]) -> Iterator[tuple[tuple[EdgeId, ...], bool]]:
    if len(edges) == 4:
        yield tuple(edges), False
        return
    x = verts[-1]
    for f in g.incident(x):
        if f == edges[-1]:
            continue
        y = g.other(f, x)
        if y in verts:
            if len(edges) == 3 and y == verts[0] and len(verts) == 4:
                yield tuple(edges) + (f,), True
            continue
        verts.append(y)
        edges.append(f)
        yield from _extend(g, verts, edges)
        verts.pop()
        edges.pop()


def walks_through(g: Multigraph, e: EdgeId) -> Iterator[tuple[tuple[EdgeId, ...], bool]]:
    """Every 4-edge simple path or 4-cycle containing ``e``.

    Yields ``(edge sequence, is_cycle)``; a witness may be produced more than
    once in different orientations.
    """
    u, v = g.endpoints[e]
    for a, b in ((u, v), (v, u)):
        # e in first position
        yield from _extend(g, [a, b], [e])
        # e in second position
        for f in g.incident(a):
            if f == e:
                continue
            z = g.other(f, a)
            if z == b:
                continue
            yield from _extend(g, [z, a, b], [f, e])


def canonical_witness(seq: tuple[EdgeId, ...], is_cycle: bool) -> tuple[EdgeId, ...]:
    if not is_cycle:
        return min(seq, seq[::-1])
    forms = []
    for s in (seq, seq[::-1]):
        for k in range(len(s)):
            forms.append(s[k:] + s[:k])
    return min(forms)


def _improper_pairs(g: Multigraph, c: Mapping[EdgeId, int]) -> Iterator[tuple[EdgeId, EdgeId]]:
    for v in range(g.vertex_count):
        inc = [f for f in g.incident(v) if f in c]
        for i, f in enumerate(inc):
            for h in inc[i + 1:]:
                if c[f] == c[h]:
                    yield (min(f, h), max(f, h))


def _bichromatic(g: Multigraph, c: Mapping[EdgeId, int], e: EdgeId) -> Iterator[Violation]:
    for seq, closed in walks_through(g, e):
        if any(f not in c for f in seq):
            continue
        if len({c[f] for f in seq}) == 2:
            yield Violation(BICHROMATIC_CYCLE if closed else BICHROMATIC_PATH,
                            canonical_witness(seq, closed))


def _least_violation(g: Multigraph, c: Mapping[EdgeId, int]) -> Violation | None:
    pairs = list(_improper_pairs(g, c))
    if pairs:
        return Violation(IMPROPER, min(pairs))
    best = None
    for e in sorted(c):
        for viol in _bichromatic(g, c, e):
            if best is None or viol.witness < best.witness:
                best = viol
    return best


def _check_keys(g: Multigraph, c: Mapping[EdgeId, int]) -> None:
    for e in c:
        if not 0 <= e < g.edge_count:
            raise InputError(f"coloring references unknown edge {e}")


def find_violation(g: Multigraph, c: Mapping[EdgeId, int]) -> Violation | None:
    """Least violation of a total coloring, or ``None`` if it is a star coloring.

    Improper pairs take precedence; among witnesses of the same class the
    lexicographically least edge sequence is returned.
    """
    _check_keys(g, c)
    missing = [e for e in g.edges() if e not in c]
    if missing:
        raise InputError(f"coloring is partial (edge {missing[0]} uncolored); "
                         "use find_violation_partial")
    return _least_violation(g, c)


def find_violation_partial(g: Multigraph, c: Mapping[EdgeId, int]) -> Violation | None:
    """Like :func:`find_violation` but only over fully colored witnesses."""
    _check_keys(g, c)
    return _least_violation(g, c)


def has_violation_through(g: Multigraph, c: Mapping[EdgeId, int], e: EdgeId) -> bool:
    """True if colored edge ``e`` takes part in some violation of ``c``."""
    col = c[e]
    for f in g.adjacent_edges(e):
        if c.get(f) == col:
            return True
    return next(_bichromatic(g, c, e), None) is not None


def respects_lists(c: Mapping[EdgeId, int], lists: ListAssignment) -> bool:
    for e, col in c.items():
        if e not in lists:
            raise InputError(f"edge {e} is colored but has no list")
        if col not in lists[e]:
            return False
    return True


def is_star_coloring(g: Multigraph, c: Mapping[EdgeId, int]) -> bool:
    return find_violation(g, c) is None
