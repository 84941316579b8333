"""Exhaustive search for extremal Berge-free hypergraphs and g_r maximizers.

`max_berge_free(n, r, f)` computes ex_r(n, Berge-f) exactly at desk scale.
The search branches over candidate r-sets in lexicographic order, each
branch adding a set strictly greater than the last, so every free family
is visited exactly once as an index-increasing chain.  Pruning:

  * incremental freeness: adding one hyperedge can only create Berge
    copies that use it, so containment is rechecked anchored at the new
    hyperedge only;
  * capacity: a branch dies when even taking every remaining candidate
    cannot beat the incumbent;
  * shallow isomorph rejection: a prefix is extended only when its edge
    set is lexicographically least within its isomorphism class (checked
    up to a configurable depth).  Prefixes of a lex-least family are
    lex-least, so each class keeps its lex-least representative and the
    maximum survives.

The incumbent is seeded from a lexicographic greedy maximal family and,
optionally, a construction witness (verified Berge-free first), which
usually starts the search at or near the optimum.  Budget exhaustion is a
first-class outcome: the result is then flagged exact=False and its
optimum is only a lower bound; it is never treated as freeness evidence.

Parallel runs split the branch tree at depth two across worker processes.
Workers share nothing (each prunes against the seed incumbent only) and
results combine by maximum with a lexicographically-least witness
tie-break, so optimum, witness, and node counts are identical across
parallelism levels, budget or not.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from .berge import BudgetExhaustedError, contains_berge, is_tree
from .bounds import BoundSpec, enumerate_free_graphs, evaluate
from .constructions import near_regular_construction, turan_hypergraph, ConstructionError
from .core import (
    BLUE,
    RED,
    Graph,
    Hypergraph,
    RedBlueGraph,
    _count_in,
    contains_subgraph,
)

__all__ = [
    "SearchConfig",
    "SearchResult",
    "ThresholdRow",
    "ThresholdReport",
    "max_berge_free",
    "max_g_r",
    "threshold_n0",
    "construction_seed",
]


@dataclass(frozen=True)
class SearchConfig:
    """Search knobs.  node_budget is charged per explored branch subtree
    (per worker task), keeping results identical across parallelism."""

    node_budget: int = 50_000_000
    parallelism: int = 1
    prune_with_bound: BoundSpec | None = None
    record_witness: bool = True
    seed_witness: Hypergraph | None = None
    orderly_depth: int = 4
    guard_max_n: int = 8
    guard_max_candidates: int = 70
    guard_max_n_colored: int = 7

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError("node budget must be >= 1")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    witness: object | None
    nodes_explored: int
    exact: bool


# ---------------------------------------------------------------------------
# Lex-least isomorph rejection
# ---------------------------------------------------------------------------

_lex_least_cache: dict[tuple[int, tuple], bool] = {}


def _is_lex_least(n: int, edges: tuple[tuple[int, ...], ...]) -> bool:
    """Is this sorted edge family lexicographically least under relabeling?

    Any relabeling producing a smaller family must map some member onto
    the first r-set (0, .., r-1), so only permutations doing that are
    tried: choose the member, a bijection onto the first r-set, and any
    arrangement of the remaining labels.
    """
    key = (n, edges)
    hit = _lex_least_cache.get(key)
    if hit is not None:
        return hit
    r = len(edges[0])
    result = True
    if edges[0] != tuple(range(r)):
        result = False
    else:
        rest_labels = list(range(r, n))
        perm = list(range(n))
        done = False
        for e in edges:
            if done:
                break
            others = [v for v in range(n) if v not in e]
            for phase in itertools.permutations(range(r)):
                for v, img in zip(e, phase):
                    perm[v] = img
                for arrangement in itertools.permutations(rest_labels):
                    for v, img in zip(others, arrangement):
                        perm[v] = img
                    mapped = sorted(tuple(sorted(perm[v] for v in f)) for f in edges)
                    if tuple(mapped) < edges:
                        result = False
                        done = True
                        break
                if done:
                    break
    _lex_least_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# Berge-free maximization
# ---------------------------------------------------------------------------

_WORK: dict = {}


def _init_worker(payload) -> None:
    _WORK.update(payload)


def _free_after_adding(h: Hypergraph, edge: tuple[int, ...], f: Graph) -> Hypergraph | None:
    """Extended hypergraph when still Berge-f-free (h itself must be free)."""
    trial = h.add_edge(edge)
    anchor = len(trial.edges) - 1  # edges are added in increasing lex order
    if contains_berge(trial, f, anchor=anchor) is None:
        return trial
    return None


def _explore_task(task: tuple[int, int], work: dict | None = None):
    """Exhaust the branch subtree rooted at a two-edge prefix.

    Returns (best_size, best_index_tuple, nodes, exhausted).
    """
    work = work if work is not None else _WORK
    n = work["n"]
    f = work["f"]
    candidates = work["candidates"]
    orderly_depth = work["orderly_depth"]
    budget = work["budget"]
    baseline = work["baseline"]
    stop_at = work["stop_at"]
    total = len(candidates)

    i, j = task
    root = Hypergraph(n, work["r"], (candidates[i], candidates[j]))
    best_size = baseline
    best_indices: tuple[int, ...] | None = None
    nodes = 0
    exhausted = False

    def rec(h: Hypergraph, indices: tuple[int, ...], last: int) -> None:
        nonlocal best_size, best_indices, nodes, exhausted
        if exhausted:
            return
        nodes += 1
        if nodes > budget:
            exhausted = True
            return
        m = len(indices)
        if m > best_size:
            best_size = m
            best_indices = indices
        if stop_at is not None and best_size >= stop_at:
            return
        for k in range(last + 1, total):
            if m + (total - k) <= best_size:
                break
            if m + 1 <= orderly_depth:
                prefix = tuple(candidates[t] for t in indices) + (candidates[k],)
                if not _is_lex_least(n, prefix):
                    continue
            trial = _free_after_adding(h, candidates[k], f)
            if trial is not None:
                rec(trial, indices + (k,), k)

    rec(root, (i, j), j)
    return best_size, best_indices, nodes, exhausted


def _greedy_family(n: int, r: int, f: Graph,
                   candidates: list[tuple[int, ...]]) -> tuple[int, ...]:
    """Lexicographic greedy maximal free family, as index tuple."""
    h = Hypergraph(n, r, ())
    picked: list[int] = []
    for idx, e in enumerate(candidates):
        trial = _free_after_adding(h, e, f)
        if trial is not None:
            h = trial
            picked.append(idx)
    return tuple(picked)


def construction_seed(n: int, r: int, f: Graph) -> Hypergraph | None:
    """Best applicable extremal construction, verified Berge-f-free.

    Cliques get the Turan hypergraph, trees the blocks-of-k construction
    (components of k vertices cannot host a connected k+1-vertex core),
    stars additionally the near-regular degree-capped hypergraph.
    """
    candidates: list[Hypergraph] = []
    if f.is_complete() and f.n >= 2:
        candidates.append(turan_hypergraph(n, f.n - 1, r))
    if is_tree(f) and f.n >= 2:
        k = f.n - 1
        edges = []
        for start in range(0, n, k):
            block = range(start, min(start + k, n))
            edges.extend(itertools.combinations(block, r))
        candidates.append(Hypergraph(n, r, edges))
        degree = max(f.degree(v) for v in range(f.n))
        if degree == k and 2 <= k <= r + 1 and n >= r:
            # stars: any hypergraph with maximum degree <= k-1 is free
            try:
                candidates.append(near_regular_construction(n, k, r))
            except ConstructionError:
                pass
    best: Hypergraph | None = None
    for h in candidates:
        if contains_berge(h, f) is not None:
            raise RuntimeError("construction seed unexpectedly contains the pattern")
        if best is None or len(h.edges) > len(best.edges):
            best = h
    return best


def max_berge_free(n: int, r: int, f: Graph,
                   cfg: SearchConfig | None = None) -> SearchResult:
    """Exact ex_r(n, Berge-f) with witness, by exhaustive pruned search."""
    cfg = cfg or SearchConfig()
    if r < 2:
        raise ValueError("uniformity must be >= 2")
    if not f.edges:
        raise ValueError("pattern must have at least one edge")
    candidates = list(itertools.combinations(range(n), r))
    if n > cfg.guard_max_n or len(candidates) > cfg.guard_max_candidates:
        raise ValueError(
            f"search guard: n={n} with {len(candidates)} candidate r-sets exceeds "
            f"(n <= {cfg.guard_max_n}, candidates <= {cfg.guard_max_candidates})")

    stop_at: int | None = None
    if cfg.prune_with_bound is not None:
        bound = evaluate(cfg.prune_with_bound)
        if bound.asymptotic:
            raise ValueError("asymptotic bounds cannot prune a finite search")
        if bound.assumptions:
            raise ValueError("conditional bounds cannot prune a search")
        stop_at = int(bound.value)

    baseline_indices = _greedy_family(n, r, f, candidates)
    baseline_witness: Hypergraph = Hypergraph(
        n, r, tuple(candidates[i] for i in baseline_indices))
    if cfg.seed_witness is not None:
        seed = cfg.seed_witness
        if seed.n != n or seed.r != r:
            raise ValueError("seed witness has mismatched n or r")
        if contains_berge(seed, f) is not None:
            raise ValueError("seed witness is not Berge-free of the pattern")
        if len(seed.edges) > len(baseline_witness.edges):
            baseline_witness = seed
    baseline = len(baseline_witness.edges)

    # task roots: free, lex-least two-edge prefixes
    tasks: list[tuple[int, int]] = []
    for i in range(len(candidates)):
        if cfg.orderly_depth >= 1 and not _is_lex_least(n, (candidates[i],)):
            continue
        hi = Hypergraph(n, r, (candidates[i],))
        if contains_berge(hi, f) is not None:
            continue
        for j in range(i + 1, len(candidates)):
            pair = (candidates[i], candidates[j])
            if cfg.orderly_depth >= 2 and not _is_lex_least(n, pair):
                continue
            if contains_berge(Hypergraph(n, r, pair), f) is None:
                tasks.append((i, j))

    payload = {
        "n": n, "r": r, "f": f, "candidates": candidates,
        "orderly_depth": cfg.orderly_depth, "budget": cfg.node_budget,
        "baseline": baseline, "stop_at": stop_at,
    }
    if cfg.parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism,
                                 initializer=_init_worker,
                                 initargs=(payload,)) as pool:
            outcomes = list(pool.map(_explore_task, tasks, chunksize=8))
    else:
        outcomes = [_explore_task(t, payload) for t in tasks]

    best_size = baseline
    best_indices: tuple[int, ...] | None = None
    nodes = 0
    exact = True
    for size, indices, task_nodes, exhausted in outcomes:
        nodes += task_nodes
        if exhausted:
            exact = False
        if indices is not None and (size > best_size or (
                size == best_size and best_indices is not None and indices < best_indices)):
            best_size = size
            best_indices = indices

    if best_indices is not None:
        witness = Hypergraph(n, r, tuple(candidates[t] for t in best_indices))
    else:
        witness = baseline_witness
    if contains_berge(witness, f) is not None:
        raise AssertionError("search produced a witness containing the pattern")
    if stop_at is not None and best_size > stop_at:
        raise AssertionError("search exceeded the supplied upper bound")
    if stop_at is not None and best_size == stop_at:
        exact = True
    return SearchResult(best_size, witness if cfg.record_witness else None,
                        nodes, exact)


# ---------------------------------------------------------------------------
# Red-blue g_r maximization
# ---------------------------------------------------------------------------

def _clique_count_of_edge_subset(n: int, edges: tuple[tuple[int, int], ...],
                                 mask: int, r: int) -> int:
    adj = [0] * n
    for pos, (u, v) in enumerate(edges):
        if mask >> pos & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    total = 0
    seen = 0
    for v in range(n):
        seen |= 1 << v
        later = adj[v] & ~seen
        total += _count_in(tuple(adj), later, r - 1)
    return total


def max_g_r(n: int, k: int, r: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Exact maximum of g_r over K_k-free red-blue graphs on n vertices.

    Underlying graphs are enumerated once per isomorphism class; colorings
    are exhausted edge by edge with an admissible bound (undecided edges
    all red plus every clique still available in blue).
    """
    cfg = cfg or SearchConfig()
    if n > cfg.guard_max_n_colored:
        raise ValueError(f"colored search guard: n <= {cfg.guard_max_n_colored}")
    if k < 2 or r < 2:
        raise ValueError("need k >= 2 and r >= 2")
    pattern = Graph(k, itertools.combinations(range(k), 2))
    reps = enumerate_free_graphs(n, pattern)

    best_value = -1
    best_witness: RedBlueGraph | None = None
    nodes = 0
    exact = True

    for g in reps:
        edges = g.edges
        m = len(edges)
        full = (1 << m) - 1

        def rec(pos: int, blue_mask: int, red: int) -> None:
            nonlocal best_value, best_witness, nodes, exact
            if not exact:
                return
            nodes += 1
            if nodes > cfg.node_budget:
                exact = False
                return
            if pos == m:
                value = red + _clique_count_of_edge_subset(n, edges, blue_mask, r)
                if value > best_value:
                    best_value = value
                    colors = tuple(BLUE if blue_mask >> t & 1 else RED
                                   for t in range(m))
                    best_witness = RedBlueGraph(g, colors)
                return
            undecided = full & ~((1 << pos) - 1)
            cap = red + (m - pos) + _clique_count_of_edge_subset(
                n, edges, blue_mask | undecided, r)
            if cap <= best_value:
                return
            rec(pos + 1, blue_mask, red + 1)
            rec(pos + 1, blue_mask | (1 << pos), red)

        rec(0, 0, 0)

    assert best_witness is not None
    if contains_subgraph(best_witness.graph, pattern):
        raise AssertionError("g_r witness is not K_k-free")
    return SearchResult(best_value, best_witness if cfg.record_witness else None,
                        nodes, exact)


# ---------------------------------------------------------------------------
# Empirical Turan-optimality threshold
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ThresholdRow:
    n: int
    turan_edges: int
    optimum: int
    turan_optimal: bool


@dataclass(frozen=True)
class ThresholdReport:
    """Per-n comparison of the Turan hypergraph against the search optimum.

    threshold is the smallest tested n from which the Turan hypergraph
    stays optimal through n_max (0 when it is optimal at every tested n,
    None when it is not optimal at n_max); verified only up to n_max.
    """

    k: int
    r: int
    rows: tuple[ThresholdRow, ...]
    threshold: int | None
    verified_up_to: int


def threshold_n0(k: int, r: int, n_max: int,
                 cfg: SearchConfig | None = None) -> ThresholdReport:
    """Range-verified empirical threshold for Turan-hypergraph optimality."""
    if not r < k:
        raise ValueError("threshold needs r < k")
    cfg = cfg or SearchConfig()
    pattern = Graph(k, itertools.combinations(range(k), 2))
    rows = []
    for n in range(1, n_max + 1):
        turan = turan_hypergraph(n, k - 1, r)
        result = max_berge_free(n, r, pattern, replace(cfg, seed_witness=turan))
        if not result.exact:
            raise BudgetExhaustedError(f"threshold search at n={n} ran out of budget")
        rows.append(ThresholdRow(n, len(turan.edges), result.optimum,
                                 len(turan.edges) == result.optimum))
    threshold: int | None = None
    if rows and rows[-1].turan_optimal:
        start = n_max
        while start > 1 and rows[start - 2].turan_optimal:
            start -= 1
        threshold = 0 if start == 1 else start
    return ThresholdReport(k, r, tuple(rows), threshold, n_max)
