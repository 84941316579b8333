"""Pattern-graph families and extremal constructions.

Pattern families (P_k is the path with k edges on k+1 vertices, S_k the
star with k edges, Theta_{k,t} the union of t internally disjoint paths of
length k between two hubs, a spider a tree with at most one vertex of
degree above 2).  Vertex labeling is deterministic with hub/endpoint
vertices first.

Constructions:
  * turan_graph(n, k): complete k-partite graph with balanced parts,
    vertex i in part i mod k, so larger parts come first.
  * turan_hypergraph(n, k, r): all transversal r-sets of the balanced
    k-partition (empty when r > k).
  * partition_construction(n, k, r): disjoint complete r-graphs on k
    vertices each, (n/k) * C(k, r) hyperedges; Berge-free of any tree on
    k+1 vertices since components stop at k vertices.
  * near_regular_construction(n, k, r): floor(n(k-1)/r) hyperedges with
    every degree <= k-1, built by rotating rounds of consecutive blocks on
    a cyclic vertex order with a lexicographic fix-up; fails honestly when
    the degree cap cannot be met at small n.
  * expansion(f, r): pad each edge of f with r-2 fresh vertices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .core import Graph, Hypergraph

__all__ = [
    "PatternFamily",
    "ConstructionError",
    "build_pattern",
    "parse_pattern_name",
    "turan_graph",
    "turan_hypergraph",
    "partition_construction",
    "near_regular_construction",
    "expansion",
]

PATH = "path"
CYCLE = "cycle"
STAR = "star"
CLIQUE = "clique"
COMPLETE_BIPARTITE = "complete_bipartite"
THETA = "theta"
SPIDER = "spider"
TREE = "tree"

_KINDS = (PATH, CYCLE, STAR, CLIQUE, COMPLETE_BIPARTITE, THETA, SPIDER, TREE)


class ConstructionError(ValueError):
    """A construction's stated shape cannot be realized for these parameters."""


@dataclass(frozen=True)
class PatternFamily:
    """A named pattern graph family with integer parameters."""

    kind: str
    params: tuple[int, ...]

    def __init__(self, kind: str, params):
        if kind not in _KINDS:
            raise ValueError(f"unknown pattern kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "params", tuple(int(p) for p in params))


def build_pattern(p: PatternFamily) -> Graph:
    """Concrete graph for a pattern family, deterministically labeled."""
    kind, params = p.kind, p.params
    if kind == PATH:
        (k,) = params
        if k < 1:
            raise ValueError("path needs >= 1 edge")
        return Graph(k + 1, [(i, i + 1) for i in range(k)])
    if kind == CYCLE:
        (k,) = params
        if k < 3:
            raise ValueError("cycle needs >= 3 edges")
        return Graph(k, [(i, (i + 1) % k) for i in range(k)])
    if kind == STAR:
        (k,) = params
        if k < 1:
            raise ValueError("star needs >= 1 edge")
        return Graph(k + 1, [(0, i) for i in range(1, k + 1)])
    if kind == CLIQUE:
        (k,) = params
        if k < 1:
            raise ValueError("clique needs >= 1 vertex")
        return Graph(k, itertools.combinations(range(k), 2))
    if kind == COMPLETE_BIPARTITE:
        s, t = params
        if s < 1 or t < 1:
            raise ValueError("complete bipartite parts must be >= 1")
        return Graph(s + t, [(i, s + j) for i in range(s) for j in range(t)])
    if kind == THETA:
        k, t = params
        if k < 2 or t < 2:
            raise ValueError("theta graph needs path length >= 2 and >= 2 paths")
        edges = []
        nxt = 2
        for _ in range(t):
            prev = 0
            for _ in range(k - 1):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
            edges.append((prev, 1))
        return Graph(nxt, edges)
    if kind == SPIDER:
        legs = params
        if not legs or any(l < 1 for l in legs):
            raise ValueError("spider needs legs of length >= 1")
        edges = []
        nxt = 1
        for l in legs:
            prev = 0
            for _ in range(l):
                edges.append((prev, nxt))
                prev = nxt
                nxt += 1
        return Graph(nxt, edges)
    if kind == TREE:
        if len(params) % 2 != 0 or not params:
            raise ValueError("explicit tree takes a flattened edge list")
        edges = list(zip(params[::2], params[1::2]))
        n = max(max(e) for e in edges) + 1
        g = Graph(n, edges)
        if len(g.edges) != n - 1:
            raise ValueError("explicit tree edge list is not a tree")
        return g
    raise ValueError(f"unknown pattern kind {kind!r}")


def parse_pattern_name(name: str) -> PatternFamily:
    """Parse compact names: K4, P3, S3, C6, K2,3, theta:3,4, spider:2,1,1, tree:0-1,1-2."""
    name = name.strip()
    if name.startswith("theta:"):
        k, t = name[len("theta:"):].split(",")
        return PatternFamily(THETA, (int(k), int(t)))
    if name.startswith("spider:"):
        legs = name[len("spider:"):].split(",")
        return PatternFamily(SPIDER, tuple(int(l) for l in legs))
    if name.startswith("tree:"):
        flat: list[int] = []
        for part in name[len("tree:"):].split(","):
            u, v = part.split("-")
            flat.extend((int(u), int(v)))
        return PatternFamily(TREE, tuple(flat))
    head, rest = name[:1], name[1:]
    if head == "K" and "," in rest:
        s, t = rest.split(",")
        return PatternFamily(COMPLETE_BIPARTITE, (int(s), int(t)))
    kinds = {"K": CLIQUE, "P": PATH, "S": STAR, "C": CYCLE}
    if head in kinds and rest.isdigit():
        return PatternFamily(kinds[head], (int(rest),))
    raise ValueError(f"cannot parse pattern name {name!r}")


def _balanced_parts(n: int, k: int) -> list[list[int]]:
    parts: list[list[int]] = [[] for _ in range(k)]
    for v in range(n):
        parts[v % k].append(v)
    return parts


def turan_graph(n: int, parts: int) -> Graph:
    """Complete multipartite graph with balanced parts (larger parts first)."""
    if parts < 1:
        raise ValueError("need >= 1 part")
    groups = _balanced_parts(n, parts)
    edges = []
    for i in range(parts):
        for j in range(i + 1, parts):
            edges.extend((min(u, v), max(u, v)) for u in groups[i] for v in groups[j])
    return Graph(n, edges)


def turan_hypergraph(n: int, parts: int, r: int) -> Hypergraph:
    """All r-sets meeting each balanced part at most once; empty when r > parts."""
    if parts < 1:
        raise ValueError("need >= 1 part")
    part_of = [v % parts for v in range(n)]
    edges = [e for e in itertools.combinations(range(n), r)
             if len({part_of[v] for v in e}) == r]
    return Hypergraph(n, r, edges)


def partition_construction(n: int, k: int, r: int) -> Hypergraph:
    """Disjoint complete r-graphs on consecutive blocks of k vertices."""
    if k < 1 or n % k != 0:
        raise ValueError(f"block size {k} must divide n={n}")
    if r > k:
        raise ValueError(f"uniformity {r} exceeds block size {k}")
    edges = []
    for start in range(0, n, k):
        block = range(start, start + k)
        edges.extend(itertools.combinations(block, r))
    h = Hypergraph(n, r, edges)
    assert len(h.edges) == (n // k) * comb(k, r)
    return h


def near_regular_construction(n: int, k: int, r: int) -> Hypergraph:
    """floor(n(k-1)/r) hyperedges with all degrees <= k-1, or an honest failure.

    Rounds t = 0..k-2 lay down floor(n/r) disjoint blocks of r consecutive
    vertices starting at offset t on the cyclic order; leftovers are filled
    by the lexicographically smallest unused r-sets that respect the degree
    cap.  Existence is only promised for large enough n, so a dead end
    raises ConstructionError instead of shaving the target.
    """
    if n < r:
        raise ValueError(f"need n >= r, got n={n}, r={r}")
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    target = n * (k - 1) // r
    cap = k - 1
    degree = [0] * n
    chosen: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def try_add(block: tuple[int, ...]) -> bool:
        if block in seen or any(degree[v] >= cap for v in block):
            return False
        seen.add(block)
        chosen.append(block)
        for v in block:
            degree[v] += 1
        return True

    for t in range(k - 1):
        for j in range(n // r):
            if len(chosen) == target:
                break
            block = tuple(sorted((t + j * r + i) % n for i in range(r)))
            try_add(block)
    if len(chosen) < target:
        for block in itertools.combinations(range(n), r):
            if len(chosen) == target:
                break
            try_add(block)
    if len(chosen) < target:
        raise ConstructionError(
            f"cannot reach {target} hyperedges with degree cap {cap} at n={n}")
    h = Hypergraph(n, r, chosen[:target])
    assert len(h.edges) == target
    assert all(h.degree(v) <= cap for v in range(n))
    return h


def expansion(f: Graph, r: int) -> Hypergraph:
    """Pad each edge of f with r-2 fresh vertices, fresh across edges."""
    if r < 2:
        raise ValueError(f"uniformity must be >= 2, got {r}")
    n = f.n + (r - 2) * len(f.edges)
    edges = []
    nxt = f.n
    for (u, v) in f.edges:
        extra = range(nxt, nxt + r - 2)
        nxt += r - 2
        edges.append(tuple(sorted((u, v, *extra))))
    return Hypergraph(n, r, edges)
