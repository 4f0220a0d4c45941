"""Star list-coloring of a single cycle.

Edge ``i`` of an ``n``-cycle is adjacent to edges ``i-1`` and ``i+1``
(mod ``n``).  A coloring is a star coloring of the cycle when it is proper
and, for ``n >= 4``, every four cyclically consecutive edges carry at least
three colors.  For ``n == 4`` the only window is the whole cycle.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError
from .multigraph import cycle_graph
from .verifier import find_violation, respects_lists

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleInstance:
    lists: tuple[frozenset[int], ...]

    def __init__(self, lists: Iterable[Iterable[int]]):
        object.__setattr__(self, "lists", tuple(frozenset(x) for x in lists))
        if len(self.lists) < 2:
            raise InputError(f"a cycle needs at least 2 edges, got {len(self.lists)}")

    @property
    def n(self) -> int:
        return len(self.lists)


def is_cycle_star_coloring(colors: Sequence[int]) -> bool:
    """Direct window check, independent of the general verifier."""
    n = len(colors)
    if any(colors[i] == colors[(i + 1) % n] for i in range(n)):
        return False
    if n == 3:
        return len(set(colors)) == 3
    if n == 4:
        return len(set(colors)) >= 3
    if n >= 5:
        return all(len({colors[(i + k) % n] for k in range(4)}) >= 3 for i in range(n))
    return True


def _verified(inst: CycleInstance, colors: Sequence[int]) -> bool:
    g = cycle_graph(inst.n)
    c = dict(enumerate(colors))
    return find_violation(g, c) is None and respects_lists(c, dict(enumerate(inst.lists)))


def dp_cycle_color(inst: CycleInstance) -> tuple[int, ...] | None:
    """Exact search for a list-respecting star coloring of the cycle.

    The first three colors are fixed in turn; a forward sweep then tracks the
    last three colors, each transition checking properness and the window
    ending at the new edge, and the three windows crossing the seam are
    checked at the end.  Cycles with at most four edges are enumerated.
    """
    n = inst.n
    lists = [sorted(x) for x in inst.lists]
    if n <= 4:
        for colors in itertools.product(*lists):
            if is_cycle_star_coloring(colors):
                return tuple(colors)
        return None

    for c0 in lists[0]:
        for c1 in lists[1]:
            if c1 == c0:
                continue
            for c2 in lists[2]:
                if c2 == c1:
                    continue
                layers: list[dict[tuple[int, int, int], tuple[int, int, int] | None]] = [
                    {(c0, c1, c2): None}]
                for i in range(3, n):
                    nxt: dict[tuple[int, int, int], tuple[int, int, int] | None] = {}
                    for state in sorted(layers[-1]):
                        a, b, c = state
                        for d in lists[i]:
                            if d == c or len({a, b, c, d}) < 3:
                                continue
                            nxt.setdefault((b, c, d), state)
                    if not nxt:
                        break
                    layers.append(nxt)
                if len(layers) != n - 2:
                    continue
                for state in sorted(layers[-1]):
                    x, y, z = state
                    if (z != c0 and len({x, y, z, c0}) >= 3 and len({y, z, c0, c1}) >= 3
                            and len({z, c0, c1, c2}) >= 3):
                        tail = []
                        cur: tuple[int, int, int] | None = state
                        for layer in reversed(layers[1:]):
                            assert cur is not None
                            tail.append(cur[2])
                            cur = layer[cur]
                        return (c0, c1, c2) + tuple(reversed(tail))
    return None


def _orient(lists: Sequence[frozenset[int]]) -> list[int] | None:
    """Position order along the cycle making the first list not contained in
    the last one, trying rotations before reflections."""
    n = len(lists)
    for reflect in (False, True):
        for r in range(n):
            order = [(r - j) % n if reflect else (r + j) % n for j in range(n)]
            if lists[order[0]] - lists[order[-1]]:
                return order
    return None


def _least(allowed: frozenset[int] | set[int]) -> int:
    if not allowed:
        raise LookupError("no admissible color")
    return min(allowed)


def _even_case(L: Sequence[frozenset[int]]) -> list[int]:
    n = len(L)
    s = [0] * n
    s[0] = _least(L[0] - L[n - 1])
    for i in range(2, n - 1, 2):
        banned = {s[i - 2]}
        if i == n - 2:
            banned.add(s[0])
        s[i] = _least(L[i] - banned)
    for i in range(1, n, 2):
        s[i] = _least(L[i] - {s[i - 1], s[(i + 1) % n]})
    return s


def _odd_case(L: Sequence[frozenset[int]]) -> list[int]:
    n = len(L)
    s = [0] * n
    s[0] = _least(L[0] - L[n - 1])
    for i in range(2, n - 2, 2):
        s[i] = _least(L[i] - {s[i - 2]})
    s[1] = _least(L[1] - {s[0], s[2]})
    # s[0] is outside L[n-1] by construction
    s[n - 1] = _least(L[n - 1] - {s[n - 3], s[1]})
    for i in range(3, n - 1, 2):
        s[i] = _least(L[i] - {s[i - 1], s[i + 1]})
    return s


def _run_procedure(inst: CycleInstance, lists: Sequence[frozenset[int]], order: list[int],
                   name: str) -> tuple[int, ...]:
    L = [lists[k] for k in order]
    try:
        local = _even_case(L) if inst.n % 2 == 0 else _odd_case(L)
    except LookupError:
        local = None
    if local is not None:
        colors = [0] * inst.n
        for j, k in enumerate(order):
            colors[k] = local[j]
        if _verified(inst, colors):
            return tuple(colors)
    log.warning("%s procedure failed self-check on lists %s; using exact search",
                name, [sorted(x) for x in inst.lists])
    fallback = dp_cycle_color(inst)
    if fallback is None:
        raise InputError(f"cycle instance is not star colorable: {inst}")
    return fallback


def color_cycle_lemma2(inst: CycleInstance) -> tuple[int, ...]:
    """Star coloring of a non-5 cycle from lists of size at least 3 that are
    not all equal.

    Even cycles alternate: the odd-indexed edges get a chain of colors
    differing from the previous one (and the last from the first), then
    every remaining edge avoids its two neighbours.  Odd cycles run the same
    chain up to the third-last edge, then color the second edge, then the
    last edge avoiding the third-last and the second, then fill the rest.
    """
    n = inst.n
    if n == 5:
        raise InputError("the 5-cycle is handled by color_c5_lemma3")
    if any(len(x) < 3 for x in inst.lists):
        raise InputError("every list needs at least 3 colors")
    order = _orient(inst.lists)
    if order is None:
        raise InputError("all lists are equal; use color_cycle_identical_lists")
    if n <= 4:
        colors = dp_cycle_color(inst)
        if colors is None:
            raise InputError(f"cycle instance is not star colorable: {inst}")
        return colors
    return _run_procedure(inst, inst.lists, order, "cycle")


def color_c5_lemma3(inst: CycleInstance) -> tuple[int, ...]:
    """Star coloring of a 5-cycle whose lists (size >= 3) span >= 4 colors."""
    if inst.n != 5:
        raise InputError(f"expected a 5-cycle, got {inst.n} edges")
    if any(len(x) < 3 for x in inst.lists):
        raise InputError("every list needs at least 3 colors")
    if len(frozenset().union(*inst.lists)) < 4:
        raise InputError("the lists of a 5-cycle must span at least 4 colors")
    lists = list(inst.lists)
    order = _orient(lists)
    if order is None:
        # all lists equal with >= 4 colors: narrow one of them
        lists[4] = lists[4] - {max(lists[4])}
        order = _orient(lists)
        assert order is not None
    return _run_procedure(inst, lists, order, "5-cycle")


def color_cycle_identical_lists(n: int, palette: Iterable[int]) -> tuple[int, ...]:
    """Star coloring of an ``n``-cycle (``n != 5``) using the three least
    palette colors."""
    colors = sorted(set(palette))
    if n == 5:
        raise InputError("the 5-cycle has no star coloring from 3 identical colors")
    if n < 2:
        raise InputError(f"a cycle needs at least 2 edges, got {n}")
    if len(colors) < 3:
        raise InputError("palette needs at least 3 colors")
    a, b, c = colors[:3]
    if n % 3 == 0:
        return (a, b, c) * (n // 3)
    found = dp_cycle_color(CycleInstance([{a, b, c}] * n))
    if found is None:
        raise InputError(f"no star coloring of C{n} from 3 colors")
    return found


def color_cycle(inst: CycleInstance) -> tuple[int, ...]:
    """Dispatch to the applicable constructive procedure."""
    if inst.n == 5:
        return color_c5_lemma3(inst)
    if len(set(inst.lists)) == 1:
        return color_cycle_identical_lists(inst.n, inst.lists[0])
    return color_cycle_lemma2(inst)
