"""End-to-end acceptance suite.  Each test records one pass/fail line that is
echoed in the terminal summary under "acceptance criteria"."""

from __future__ import annotations

import random
import time

import pytest

from starlit.cycles import CycleInstance, color_c5_lemma3, color_cycle_lemma2, dp_cycle_color
from starlit.fuzz import FuzzConfig, run_fuzz
from starlit.generators import random_subcubic
from starlit.multigraph import cycle_graph
from starlit.colorer import star_edge_color_list
from starlit.oracle import exhaustive_star_color, named_graph, star_chromatic_index
from starlit.verifier import find_violation, respects_lists

from conftest import record_acceptance

FUZZ_SEED = 2024


@pytest.fixture(scope="module")
def campaign(tmp_path_factory):
    config = FuzzConfig(instance_count=1000, max_vertices=40, palette_size=21,
                        seed=FUZZ_SEED, allow_parallel=True)
    instances = []

    def keep(i, g, lists, coloring, traces):
        instances.append((g, lists, coloring, traces))

    start = time.perf_counter()
    report = run_fuzz(config, on_instance=keep, diag_root=tmp_path_factory.mktemp("diag"))
    return report, instances, time.perf_counter() - start


def test_criterion_1_fuzz_campaign(campaign):
    report, instances, elapsed = campaign
    rechecked = sum(1 for g, lists, c, _ in instances
                    if find_violation(g, c) is None and respects_lists(c, lists)
                    and sorted(c) == list(g.edges()))
    passed = (report.instances == 1000 and report.verified == 1000 and not report.failures
              and rechecked == 1000 and elapsed <= 300)
    record_acceptance(1, passed, f"{rechecked}/1000 verified, {len(report.failures)} failures, "
                                 f"{elapsed:.1f}s")
    assert passed, report.failures[:3]


FIXTURES = [("k33", 6), ("k4_subdivided_edge", 6), ("complement_c6", 6), ("cube_q3", 4), ("c5", 4)]


def test_criterion_2_exact_indices():
    details, passed = [], True
    for name, expected in FIXTURES:
        start = time.perf_counter()
        got = star_chromatic_index(named_graph(name), max_k=7)
        elapsed = time.perf_counter() - start
        ok = got == expected and got <= 7 and elapsed <= 60
        passed &= ok
        details.append(f"{name}={got}")
    record_acceptance(2, passed, ", ".join(details))
    assert passed


def _random_three_lists(rng, n):
    while True:
        lists = [frozenset(rng.sample(range(1, 7), 3)) for _ in range(n)]
        if any(lists[i] != lists[(i + 1) % n] for i in range(n)):
            return CycleInstance(lists)


def _cycle_ok(inst, colors):
    c = dict(enumerate(colors))
    return (len(colors) == inst.n and find_violation(cycle_graph(inst.n), c) is None
            and respects_lists(c, dict(enumerate(inst.lists))))


def test_criterion_3_cycle_procedures():
    rng = random.Random(FUZZ_SEED)
    discrepancies = 0
    for n in [n for n in range(2, 13) if n != 5]:
        for _ in range(200):
            inst = _random_three_lists(rng, n)
            discrepancies += not _cycle_ok(inst, color_cycle_lemma2(inst))
    done = 0
    while done < 500:
        lists = [frozenset(rng.sample(range(1, 6), 3)) for _ in range(5)]
        if len(frozenset().union(*lists)) < 4:
            continue
        inst = CycleInstance(lists)
        discrepancies += not _cycle_ok(inst, color_c5_lemma3(inst))
        done += 1
    dp_checked = 0
    for n in range(2, 9):
        for _ in range(60):
            inst = CycleInstance([frozenset(rng.sample(range(1, 5), rng.randint(1, 4)))
                                  for _ in range(n)])
            got = dp_cycle_color(inst)
            brute = exhaustive_star_color(cycle_graph(n), dict(enumerate(inst.lists)))
            discrepancies += (got is None) != (brute is None)
            if got is not None:
                discrepancies += not _cycle_ok(inst, got)
            dp_checked += 1
    record_acceptance(3, discrepancies == 0,
                      f"{discrepancies} discrepancies (2000 cycle, 500 five-cycle, "
                      f"{dp_checked} dp-vs-brute instances)")
    assert discrepancies == 0


def _body_violations(t) -> list[str]:
    g, cactus, matching = t.graph, t.cactus, t.matching
    out = []
    covered = {x for e in matching for x in g.endpoints[e]}
    if any(d == 3 and v not in covered for v, d in enumerate(g.degrees())):
        out.append("cover matching misses a degree-3 vertex")
    owner = {}
    for i, cycle in enumerate(cactus.cycles):
        verts = [x for e in cycle for x in g.endpoints[e]]
        if any(verts.count(x) != 2 for x in set(verts)):
            out.append("2-factor component is not a cycle")
        for x in verts:
            if owner.setdefault(x, i) != i:
                out.append("2-factor cycles share a vertex")
    if set(owner) != set(range(g.vertex_count)):
        out.append("2-factor is not spanning")
    mprime = cactus.leftover_matching
    for e in g.edges():
        near = g.edges_within_distance(e, 2)
        if len(near & mprime - {e}) > 4:
            out.append(f"edge {e} sees more than 4 M' edges")
    cycle_edges = {e for c in cactus.cycles for e in c}
    if any(len(t.after_matching[e]) < 3 for e in cycle_edges | cactus.connectors):
        out.append("list below 3 after M' pruning")
    if any(len(t.after_connectors[e]) < 3 for e in cycle_edges):
        out.append("list below 3 after connector pruning")
    for cycle in cactus.cycles:
        if len(cycle) == 5 and len(frozenset().union(*(t.after_connectors[e] for e in cycle))) < 4:
            out.append("5-cycle union below 4")
    for e in cycle_edges:
        for f in g.edges_within_distance(e, 2) & (mprime | cactus.connectors):
            if t.coloring[e] == t.coloring[f]:
                out.append(f"cycle edge {e} repeats the color of {f}")
    return out


def test_criterion_4_decomposition_invariants(campaign):
    _, instances, _ = campaign
    bodies, violations = 0, []
    for g, lists, coloring, traces in instances:
        for t in traces:
            bodies += 1
            violations.extend(_body_violations(t))
    passed = not violations and bodies > 0
    record_acceptance(4, passed, f"{bodies} bridgeless pieces checked, {len(violations)} violations")
    assert passed, violations[:5]


def test_criterion_5_oracle_agreement():
    rng = random.Random(FUZZ_SEED)
    checked = disagreements = 0
    while checked < 200:
        parallel = rng.random() < 0.5
        n = 2 * rng.randint(1 if parallel else 2, 6)
        g = random_subcubic(n, rng, rng.uniform(0.0, 0.4), parallel)
        if g.edge_count > 16:
            continue
        lists = {e: frozenset(range(1, 8)) for e in g.edges()}
        exact = exhaustive_star_color(g, lists, max_edges=16, symmetric=True)
        built = star_edge_color_list(g, lists)
        ok = (exact is not None and find_violation(g, exact) is None
              and find_violation(g, built) is None and respects_lists(built, lists)
              and sorted(built) == list(g.edges()))
        disagreements += not ok
        checked += 1
    record_acceptance(5, disagreements == 0, f"{checked} instances, {disagreements} disagreements")
    assert disagreements == 0
