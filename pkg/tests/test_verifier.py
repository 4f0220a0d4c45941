import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starlit.errors import InputError
from starlit.multigraph import Multigraph, cycle_graph, path_graph
from starlit.oracle import named_graph
from starlit.verifier import (BICHROMATIC_CYCLE, BICHROMATIC_PATH, IMPROPER, Violation,
                              find_violation, find_violation_partial, respects_lists)

from conftest import brute_is_star, random_multigraph


def test_c4_alternating_is_bichromatic_cycle():
    c4 = cycle_graph(4)
    assert find_violation(c4, {0: 1, 1: 2, 2: 1, 3: 2}) == Violation(BICHROMATIC_CYCLE, (0, 1, 2, 3))


def test_path_alternating_is_bichromatic_path():
    p = path_graph(4)
    assert find_violation(p, {0: 1, 1: 2, 2: 1, 3: 2}) == Violation(BICHROMATIC_PATH, (0, 1, 2, 3))


def test_c4_three_colors_ok():
    assert find_violation(cycle_graph(4), {0: 1, 1: 2, 2: 1, 3: 3}) is None


def test_partial_coloring_rejected_by_total_check():
    with pytest.raises(InputError):
        find_violation(cycle_graph(4), {0: 1})


def test_unknown_edge_rejected():
    with pytest.raises(InputError):
        find_violation_partial(cycle_graph(4), {9: 1})


def test_partial_examples():
    assert find_violation_partial(named_graph("k4"), {}) is None
    assert find_violation_partial(cycle_graph(4), {0: 1, 1: 2, 2: 1}) is None
    assert find_violation_partial(path_graph(2), {0: 5, 1: 5}) == Violation(IMPROPER, (0, 1))


def test_parallel_edges_must_differ():
    g = Multigraph(2, ((0, 1), (0, 1)))
    assert find_violation(g, {0: 3, 1: 3}).kind == IMPROPER
    assert find_violation(g, {0: 3, 1: 4}) is None


def test_two_cycle_is_never_a_four_witness():
    # u=v=w path through a parallel pair: 0-1 (twice), 1-2, 2-3
    g = Multigraph(4, ((0, 1), (0, 1), (1, 2), (2, 3)))
    assert find_violation(g, {0: 1, 1: 2, 2: 3, 3: 2}) is None


def test_improper_takes_precedence():
    c4 = cycle_graph(4)
    assert find_violation(c4, {0: 1, 1: 1, 2: 1, 3: 2}).kind == IMPROPER


def test_least_witness_is_returned():
    # two disjoint alternating 4-paths; the one on smaller ids wins
    g = Multigraph(10, tuple((i, i + 1) for i in range(4)) + tuple((i, i + 1) for i in range(5, 9)))
    c = {0: 1, 1: 2, 2: 1, 3: 2, 4: 1, 5: 2, 6: 1, 7: 2}
    assert find_violation(g, c).witness == (0, 1, 2, 3)


def test_respects_lists_examples():
    assert respects_lists({0: 3}, {0: frozenset({1, 2, 3})})
    assert not respects_lists({0: 4}, {0: frozenset({1, 2, 3})})
    assert respects_lists({}, {0: frozenset({1})})
    with pytest.raises(InputError):
        respects_lists({1: 2}, {0: frozenset({2})})


def _check_witness(g, c, viol):
    w = viol.witness
    if viol.kind == IMPROPER:
        assert len(w) == 2 and set(g.endpoints[w[0]]) & set(g.endpoints[w[1]])
        assert c[w[0]] == c[w[1]]
        return
    assert len(w) == 4 and len({c[e] for e in w}) == 2
    for a, b in zip(w, w[1:]):
        assert set(g.endpoints[a]) & set(g.endpoints[b])


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 9), st.integers(1, 12), st.integers(2, 4))
def test_matches_brute_force(seed, n, m, k):
    rng = random.Random(seed)
    g = random_multigraph(rng, n, m)
    c = {e: rng.randint(1, k) for e in g.edges()}
    viol = find_violation(g, c)
    assert (viol is None) == brute_is_star(g, c)
    if viol is not None:
        _check_witness(g, c, viol)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(3, 10), st.integers(1, 14))
def test_restriction_and_subgraph_closure(seed, n, m):
    rng = random.Random(seed)
    g = random_multigraph(rng, n, m)
    c = {e: rng.randint(1, 6) for e in g.edges()}
    if find_violation(g, c) is not None:
        return
    keep = [e for e in g.edges() if rng.random() < 0.6]
    assert find_violation_partial(g, {e: c[e] for e in keep}) is None
    sub, emap, _ = g.edge_subgraph(keep)
    assert find_violation(sub, {i: c[e] for i, e in enumerate(emap)}) is None
