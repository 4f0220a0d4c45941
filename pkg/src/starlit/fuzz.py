"""Randomized campaign: random subcubic multigraphs with random 7-lists."""

from __future__ import annotations

import hashlib
import os
import random
import statistics
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Callable

from .colorer import LIST_SIZE, BodyTrace, star_edge_color_list
from .errors import InputError, InternalInvariantError
from .formats import format_graph, format_lists
from .generators import random_subcubic
from .multigraph import Multigraph
from .verifier import find_violation, respects_lists

DIAG_ENV = "STARLIT_DIAG_DIR"


@dataclass(frozen=True)
class FuzzConfig:
    instance_count: int = 100
    max_vertices: int = 20
    palette_size: int = 21
    seed: int = 0
    allow_parallel: bool = False

    def __post_init__(self) -> None:
        if self.palette_size < LIST_SIZE:
            raise InputError(f"palette of {self.palette_size} colors cannot hold {LIST_SIZE}-lists")
        if self.instance_count < 0:
            raise InputError("instance count must be nonnegative")
        if self.max_vertices < (2 if self.allow_parallel else 4):
            raise InputError(f"max vertices {self.max_vertices} too small for a cubic seed graph")


@dataclass
class FuzzReport:
    config: dict[str, Any]
    instances: int = 0
    verified: int = 0
    failures: list[dict[str, Any]] = field(default_factory=list)
    timing_ms: dict[str, float] = field(default_factory=dict)

    def as_dict(self, with_timing: bool = True) -> dict[str, Any]:
        out = asdict(self)
        if not with_timing:
            out.pop("timing_ms")
        return out


def diagnostics_dir() -> Path:
    return Path(os.environ.get(DIAG_ENV, "starlit-diagnostics"))


def write_bundle(g: Multigraph, lists, stages, message: str, root: Path | None = None) -> Path:
    """Persist a reproduction bundle under a directory named by content digest."""
    graph_text = format_graph(g)
    lists_text = format_lists(lists)
    digest = hashlib.sha256((graph_text + lists_text).encode()).hexdigest()[:16]
    path = (root or diagnostics_dir()) / digest
    path.mkdir(parents=True, exist_ok=True)
    (path / "graph.txt").write_text(graph_text)
    (path / "lists.txt").write_text(lists_text)
    (path / "stages.log").write_text("\n".join(stages) + "\n" + message + "\n")
    return path


def sample_instance(config: FuzzConfig, index: int) -> tuple[Multigraph, dict[int, frozenset[int]]]:
    """Instance ``index`` of the campaign; depends only on the seed and index."""
    rng = random.Random(f"starlit-fuzz:{config.seed}:{index}")
    low = 2 if config.allow_parallel else 4
    n = rng.randrange(low, config.max_vertices + 1, 2)
    delete_prob = 0.0 if rng.random() < 0.25 else rng.uniform(0.05, 0.4)
    g = random_subcubic(n, rng, delete_prob, config.allow_parallel)
    palette = range(1, config.palette_size + 1)
    lists = {e: frozenset(rng.sample(palette, LIST_SIZE)) for e in g.edges()}
    return g, lists


def _percentile(values: list[float], q: float) -> float:
    if not values:
        return 0.0
    ordered = sorted(values)
    return ordered[min(len(ordered) - 1, int(round(q * (len(ordered) - 1))))]


def run_fuzz(config: FuzzConfig,
             on_instance: Callable[[int, Multigraph, dict, dict, list[BodyTrace]], None] | None = None,
             diag_root: Path | None = None) -> FuzzReport:
    """Color and verify every instance; failures are recorded, not raised.

    ``on_instance(index, graph, lists, coloring, traces)`` is called after
    each successful coloring.
    """
    report = FuzzReport(config=asdict(config))
    times = []
    for i in range(config.instance_count):
        g, lists = sample_instance(config, i)
        traces: list[BodyTrace] = []
        report.instances += 1
        start = time.perf_counter()
        try:
            coloring = star_edge_color_list(g, lists, traces)
        except InternalInvariantError as exc:
            path = write_bundle(g, lists, exc.bundle.get("stages", []), str(exc), diag_root)
            report.failures.append({"index": i, "error": str(exc), "bundle": str(path)})
            continue
        finally:
            times.append((time.perf_counter() - start) * 1000.0)
        viol = find_violation(g, coloring)
        if viol is not None or not respects_lists(coloring, lists):
            path = write_bundle(g, lists, [], f"verification failed: {viol}", diag_root)
            report.failures.append({"index": i, "error": f"verification failed: {viol}",
                                    "bundle": str(path)})
            continue
        report.verified += 1
        if on_instance is not None:
            on_instance(i, g, lists, coloring, traces)
    report.timing_ms = {
        "p50": _percentile(times, 0.5),
        "p90": _percentile(times, 0.9),
        "p99": _percentile(times, 0.99),
        "max": max(times, default=0.0),
        "mean": statistics.fmean(times) if times else 0.0,
    }
    return report
