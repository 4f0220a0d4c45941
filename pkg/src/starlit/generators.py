"""Random cubic and subcubic multigraphs from the pairing (configuration) model."""

from __future__ import annotations

import random

from .errors import InputError
from .multigraph import Multigraph


def random_cubic(n: int, rng: random.Random, allow_parallel: bool = True,
                 max_tries: int = 10_000) -> Multigraph:
    """Uniform random pairing of ``3n`` half-edges, rejecting loops (and
    parallel edges unless ``allow_parallel``)."""
    if n < 2 or n % 2:
        raise InputError(f"a cubic graph needs an even vertex count >= 2, got {n}")
    if n == 2 and not allow_parallel:
        raise InputError("the only cubic graph on 2 vertices has parallel edges")
    stubs = [v for v in range(n) for _ in range(3)]
    for _ in range(max_tries):
        rng.shuffle(stubs)
        pairs = [(min(a, b), max(a, b)) for a, b in zip(stubs[::2], stubs[1::2])]
        if any(a == b for a, b in pairs):
            continue
        if not allow_parallel and len(set(pairs)) != len(pairs):
            continue
        return Multigraph(n, tuple(pairs))
    raise RuntimeError(f"pairing model failed {max_tries} times for n={n}")


def random_subcubic(n: int, rng: random.Random, delete_prob: float = 0.2,
                    allow_parallel: bool = True) -> Multigraph:
    """Random cubic graph on ``n`` (rounded down to even) vertices with each
    edge deleted independently with probability ``delete_prob``; the largest
    component is kept (ties to the one holding the smallest vertex) and
    relabelled in vertex order."""
    if not 0.0 <= delete_prob <= 1.0:
        raise InputError(f"delete probability {delete_prob} outside [0, 1]")
    n -= n % 2
    cubic = random_cubic(n, rng, allow_parallel)
    kept = [uv for uv in cubic.endpoints if rng.random() >= delete_prob]
    g = Multigraph(n, tuple(kept))
    comps = g.connected_components()
    best = max(comps, key=len)
    local = {v: i for i, v in enumerate(best)}
    edges = tuple((local[u], local[v]) for u, v in kept if u in local)
    return Multigraph(len(best), edges)
