"""Bounded search for the fewest intervals any integer weighting needs.

Results are evidence, not proof: integer weights lose no generality, but no
a-priori bound on the largest useful weight is known, so a search that covers
all vectors up to a bound only rules out witnesses within that bound.
"""

from __future__ import annotations

import multiprocessing
import random
from dataclasses import dataclass, replace
from itertools import product
from typing import Iterable, Sequence

from .graphs import Graph
from .stars import Feasible, Witness, min_intervals_for_weights

SPACE_LIMIT = 10**9

MODE_EXHAUSTIVE = "exhaustive"
MODE_RANDOM = "random"


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters; identical configs give identical results.

    max_weight defaults to 2n when left unset.  target_k stops the scan at
    the first vector (in scan order) achieving at most target_k intervals.
    jobs > 1 splits the exhaustive space by first coordinate; the merge
    reproduces the serial scan exactly, so worker count never changes output.
    """

    max_weight: int | None = None
    mode: str = MODE_EXHAUSTIVE
    trials: int = 1000
    rng_seed: int = 0
    target_k: int | None = None
    jobs: int = 1
    prune_symmetry: bool = False


@dataclass(frozen=True)
class SearchResult:
    best_k: int | None  # None: every explored vector was infeasible
    best_witness: Witness | None
    explored: int
    exhaustive_within_bound: bool
    k_histogram: dict[int, int]
    infeasible_count: int


def _pairs_and_flags(graph: Graph) -> tuple[list[tuple[int, int]], list[bool]]:
    pairs = [(u, v) for u in range(graph.n) for v in range(u + 1, graph.n)]
    flags = [graph.has_edge(u, v) for u, v in pairs]
    return pairs, flags


def _run_count(w: Sequence[int], pairs: list[tuple[int, int]], flags: list[bool]) -> int | None:
    """Interval count for a weight vector, or None on an edge/non-edge sum tie."""
    items = sorted(zip((w[u] + w[v] for u, v in pairs), flags))
    k = 0
    in_run = False
    i = 0
    m = len(items)
    while i < m:
        s = items[i][0]
        has_edge = has_non = False
        while i < m and items[i][0] == s:
            if items[i][1]:
                has_edge = True
            else:
                has_non = True
            i += 1
        if has_edge and has_non:
            return None
        if has_edge:
            if not in_run:
                k += 1
                in_run = True
        else:
            in_run = False
    return k


@dataclass
class _ChunkStats:
    best: tuple[int, tuple[int, ...]] | None = None
    explored: int = 0
    infeasible: int = 0
    histogram: dict[int, int] | None = None
    first_hit: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.histogram is None:
            self.histogram = {}


def _scan_vectors(
    vectors: Iterable[tuple[int, ...]],
    pairs: list[tuple[int, int]],
    flags: list[bool],
    target_k: int | None,
    orbit: tuple[int, ...] = (),
) -> _ChunkStats:
    """Evaluate vectors in order, stopping at the first target_k hit."""
    stats = _ChunkStats()
    for vec in vectors:
        if orbit and any(vec[v] < vec[0] for v in orbit):
            continue  # an automorphism moves a smaller weight onto vertex 0
        k = _run_count(vec, pairs, flags)
        stats.explored += 1
        if k is None:
            stats.infeasible += 1
            continue
        stats.histogram[k] = stats.histogram.get(k, 0) + 1
        if stats.best is None or (k, vec) < stats.best:
            stats.best = (k, vec)
        if target_k is not None and k <= target_k:
            stats.first_hit = vec
            break
    return stats


def _scan_chunk(args) -> _ChunkStats:
    n, bound, pairs, flags, w0_values, target_k, orbit = args
    if n == 1:
        vectors: Iterable[tuple[int, ...]] = ((w0,) for w0 in w0_values)
    else:
        vectors = (
            (w0,) + rest
            for w0 in w0_values
            for rest in product(range(bound + 1), repeat=n - 1)
        )
    return _scan_vectors(vectors, pairs, flags, target_k, orbit)


def _merge_chunks(chunks: list[_ChunkStats]) -> _ChunkStats:
    """Fold per-chunk stats in scan order, honoring the first target hit."""
    total = _ChunkStats()
    for chunk in chunks:
        total.explored += chunk.explored
        total.infeasible += chunk.infeasible
        for k, c in chunk.histogram.items():
            total.histogram[k] = total.histogram.get(k, 0) + c
        if chunk.best is not None and (total.best is None or chunk.best < total.best):
            total.best = chunk.best
        if chunk.first_hit is not None:
            total.first_hit = chunk.first_hit
            break
    return total


def _automorphism_maps_zero_to(graph: Graph, target: int) -> bool:
    """Backtracking check for an adjacency-preserving bijection sending 0 to target."""
    n = graph.n
    image = [-1] * n
    used = [False] * n

    def extend(u: int) -> bool:
        if u == n:
            return True
        for cand in range(n):
            if used[cand] or graph.degree(cand) != graph.degree(u):
                continue
            ok = True
            for t in range(u):
                if graph.has_edge(u, t) != graph.has_edge(cand, image[t]):
                    ok = False
                    break
            if ok:
                image[u] = cand
                used[cand] = True
                if extend(u + 1):
                    return True
                used[cand] = False
        return False

    if graph.degree(0) != graph.degree(target):
        return False
    image[0] = target
    used[target] = True
    return extend(1)


def _orbit_of_zero(graph: Graph) -> tuple[int, ...]:
    return tuple(
        v for v in range(graph.n) if v == 0 or _automorphism_maps_zero_to(graph, v)
    )


def _validated(graph: Graph, cfg: SearchConfig) -> SearchConfig:
    if graph.n == 0:
        raise ValueError("search needs at least one vertex")
    if cfg.mode not in (MODE_EXHAUSTIVE, MODE_RANDOM):
        raise ValueError(f"unknown search mode {cfg.mode!r}")
    if cfg.jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {cfg.jobs}")
    if cfg.mode == MODE_RANDOM and cfg.trials < 1:
        raise ValueError(f"random mode needs trials >= 1, got {cfg.trials}")
    bound = cfg.max_weight if cfg.max_weight is not None else 2 * graph.n
    if bound < 1:
        raise ValueError(f"max weight must be >= 1, got {bound}")
    if cfg.target_k is not None and cfg.target_k < 0:
        raise ValueError(f"target_k must be >= 0, got {cfg.target_k}")
    if cfg.mode == MODE_EXHAUSTIVE and (bound + 1) ** graph.n > SPACE_LIMIT:
        raise ValueError(
            f"exhaustive space (W+1)^n = {(bound + 1) ** graph.n} exceeds {SPACE_LIMIT}; "
            "lower max_weight or use random mode"
        )
    return replace(cfg, max_weight=bound)


def search_min_k(graph: Graph, cfg: SearchConfig | None = None) -> SearchResult:
    """Scan weight vectors in {0..W}^n for the fewest intervals realizing `graph`.

    Exhaustive mode scans lexicographically (optionally split across jobs);
    random mode draws `trials` vectors from a seeded generator.  Ties on the
    interval count are broken toward the lexicographically smallest vector.
    """
    cfg = _validated(graph, cfg if cfg is not None else SearchConfig())
    bound = cfg.max_weight
    assert bound is not None
    pairs, flags = _pairs_and_flags(graph)
    orbit: tuple[int, ...] = ()
    if cfg.prune_symmetry and cfg.mode == MODE_EXHAUSTIVE:
        orbit = _orbit_of_zero(graph)
        if len(orbit) == 1:
            orbit = ()

    if cfg.mode == MODE_EXHAUSTIVE:
        w0_chunks = [(w0,) for w0 in range(bound + 1)]
        job_args = [
            (graph.n, bound, pairs, flags, chunk, cfg.target_k, orbit)
            for chunk in w0_chunks
        ]
        if cfg.jobs > 1:
            with multiprocessing.Pool(cfg.jobs) as pool:
                chunk_stats = pool.map(_scan_chunk, job_args)
            total = _merge_chunks(chunk_stats)
        else:
            collected = []
            for args in job_args:
                stats = _scan_chunk(args)
                collected.append(stats)
                if stats.first_hit is not None:
                    break
            total = _merge_chunks(collected)
        complete = total.first_hit is None
    else:
        rng = random.Random(cfg.rng_seed)
        vectors = (
            tuple(rng.randint(0, bound) for _ in range(graph.n))
            for _ in range(cfg.trials)
        )
        total = _scan_vectors(vectors, pairs, flags, cfg.target_k)
        complete = False

    best_k = None
    best_witness = None
    if total.best is not None:
        best_k, best_vec = total.best
        oracle = min_intervals_for_weights(graph, best_vec)
        assert isinstance(oracle, Feasible) and oracle.k == best_k
        best_witness = Witness(best_vec, oracle.intervals)
    return SearchResult(
        best_k=best_k,
        best_witness=best_witness,
        explored=total.explored,
        exhaustive_within_bound=complete and cfg.mode == MODE_EXHAUSTIVE,
        k_histogram=dict(sorted(total.histogram.items())),
        infeasible_count=total.infeasible,
    )


def search_report(graph: Graph, cfg: SearchConfig | None = None) -> dict:
    """Run a search and package the result as a JSON-ready summary."""
    cfg = cfg if cfg is not None else SearchConfig()
    result = search_min_k(graph, cfg)
    resolved_bound = cfg.max_weight if cfg.max_weight is not None else 2 * graph.n
    return {
        "config": {
            "max_weight": resolved_bound,
            "mode": cfg.mode,
            "trials": cfg.trials if cfg.mode == MODE_RANDOM else None,
            "seed": cfg.rng_seed if cfg.mode == MODE_RANDOM else None,
            "target_k": cfg.target_k,
            "jobs": cfg.jobs,
            "prune_symmetry": cfg.prune_symmetry,
        },
        "best_k": result.best_k,
        "best_witness": result.best_witness.to_dict() if result.best_witness else None,
        "explored": result.explored,
        "exhaustive_within_bound": result.exhaustive_within_bound,
        "k_histogram": {str(k): c for k, c in result.k_histogram.items()},
        "infeasible_count": result.infeasible_count,
    }


def format_search_report(report: dict) -> str:
    """Human-readable rendering of a search_report summary."""
    lines = []
    if report["best_k"] is None:
        lines.append("best: no feasible weighting explored")
    else:
        w = report["best_witness"]
        lines.append(f"best: {report['best_k']} interval(s)")
        lines.append(f"  weights   {w['weights']}")
        lines.append(f"  intervals {w['intervals']}")
    lines.append(
        f"explored {report['explored']} vector(s), "
        f"{report['infeasible_count']} infeasible"
    )
    hist = ", ".join(f"k={k}: {c}" for k, c in report["k_histogram"].items())
    lines.append(f"histogram: {hist if hist else '(empty)'}")
    if report["exhaustive_within_bound"]:
        lines.append(
            f"covered all vectors with weights <= {report['config']['max_weight']}; "
            "larger weights remain unexplored, so this is evidence, not impossibility"
        )
    else:
        lines.append("partial scan; results are an upper bound only")
    return "\n".join(lines) + "\n"
