"""Graphs, r-uniform hypergraphs, red-blue edge colorings, canonical forms.

Conventions used throughout the package:
  * Vertices are dense integers 0..n-1.
  * Graph edges are stored as sorted pairs (u, v) with u < v, the edge list
    itself sorted lexicographically.  Hyperedges are sorted r-tuples, the
    edge list sorted lexicographically.  This makes comparison, hashing and
    file I/O deterministic.
  * All objects are immutable values; every operation here is a pure
    function, safe for concurrent use.
  * Subgraph/clique counts are unlabeled: the number of injective
    edge-preserving maps divided by the automorphism count of the pattern.

The potential of a red-blue graph G for uniformity r is

    g_r(G) = e(G_red) + (number of r-cliques of G_blue),

the quantity that upper-bounds the size of a hypergraph via its shadow
decomposition (see the berge module).

Text formats:
  graph:       line "n m" then m lines "u v" with u < v.
  hypergraph:  line "n r m" then m lines of r ascending vertex indices.
Duplicate edges are rejected by both parsers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb

RED = "red"
BLUE = "blue"

__all__ = [
    "RED",
    "BLUE",
    "Graph",
    "Hypergraph",
    "RedBlueGraph",
    "CanonicalForm",
    "count_cliques",
    "g_r",
    "contains_subgraph",
    "count_subgraphs",
    "count_automorphisms",
    "canonical_form",
    "graph_to_text",
    "graph_from_text",
    "hypergraph_to_text",
    "hypergraph_from_text",
]


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1 with a sorted tuple of sorted edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        norm = []
        for e in edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < n):
                raise ValueError(f"edge {e!r} out of range for n={n}")
            norm.append((u, v))
        norm.sort()
        for a, b in itertools.pairwise(norm):
            if a == b:
                raise ValueError(f"duplicate edge {a!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex."""
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1) if u != v else False

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, self.edges + ((u, v),))

    def is_complete(self) -> bool:
        return len(self.edges) == comb(self.n, 2)

    def complement_adjacency(self) -> tuple[int, ...]:
        full = (1 << self.n) - 1
        return tuple((full & ~a) & ~(1 << v) for v, a in enumerate(self.adjacency))


@dataclass(frozen=True)
class Hypergraph:
    """r-uniform hypergraph on vertices 0..n-1; edges are sorted r-tuples."""

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...]

    def __init__(self, n: int, r: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be >= 0, got {n}")
        if r < 2:
            raise ValueError(f"uniformity must be >= 2, got {r}")
        norm = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != r or len(set(t)) != r:
                raise ValueError(f"hyperedge {e!r} is not a set of {r} distinct vertices")
            if t[0] < 0 or t[-1] >= n:
                raise ValueError(f"hyperedge {e!r} out of range for n={n}")
            norm.append(t)
        norm.sort()
        for a, b in itertools.pairwise(norm):
            if a == b:
                raise ValueError(f"duplicate hyperedge {a!r}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "edges", tuple(norm))

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        """Vertex bitmask of each hyperedge, in edge order."""
        masks = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << v
            masks.append(m)
        return tuple(masks)

    @cached_property
    def incidence(self) -> tuple[int, ...]:
        """Bitmask of incident hyperedge indices per vertex."""
        inc = [0] * self.n
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v] |= 1 << i
        return tuple(inc)

    def degree(self, v: int) -> int:
        return self.incidence[v].bit_count()

    @cached_property
    def pair_cover(self) -> dict[tuple[int, int], int]:
        """Map from each covered vertex pair to the bitmask of hyperedges containing it.

        Cached and shared; treat as read-only.
        """
        cover: dict[tuple[int, int], int] = {}
        for i, e in enumerate(self.edges):
            for p in itertools.combinations(e, 2):
                cover[p] = cover.get(p, 0) | (1 << i)
        return cover

    def add_edge(self, e) -> Hypergraph:
        return Hypergraph(self.n, self.r, self.edges + (tuple(e),))


@dataclass(frozen=True)
class RedBlueGraph:
    """Graph with a total red/blue coloring, stored aligned with graph.edges."""

    graph: Graph
    colors: tuple[str, ...]

    def __init__(self, graph: Graph, colors):
        if isinstance(colors, dict):
            try:
                colors = tuple(colors[e] for e in graph.edges)
            except KeyError as missing:
                raise ValueError(f"no color for edge {missing.args[0]!r}") from None
        colors = tuple(colors)
        if len(colors) != len(graph.edges):
            raise ValueError("coloring must be total on the edge set")
        for c in colors:
            if c not in (RED, BLUE):
                raise ValueError(f"unknown color {c!r}")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "colors", colors)

    @classmethod
    def monochromatic(cls, graph: Graph, color: str) -> RedBlueGraph:
        return cls(graph, (color,) * len(graph.edges))

    @cached_property
    def color_map(self) -> dict[tuple[int, int], str]:
        return dict(zip(self.graph.edges, self.colors))

    def color_of(self, u: int, v: int) -> str:
        if u > v:
            u, v = v, u
        return self.color_map[(u, v)]

    def red_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, c in zip(self.graph.edges, self.colors) if c == RED)

    def blue_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(e for e, c in zip(self.graph.edges, self.colors) if c == BLUE)

    @property
    def red_count(self) -> int:
        return sum(1 for c in self.colors if c == RED)

    def blue_subgraph(self) -> Graph:
        return Graph(self.graph.n, self.blue_edges())

    def red_subgraph(self) -> Graph:
        return Graph(self.graph.n, self.red_edges())

    def d_red(self, v: int) -> int:
        """Number of red edges incident to v."""
        return sum(1 for (a, b), c in zip(self.graph.edges, self.colors)
                   if c == RED and v in (a, b))

    def d_star(self, v: int, r: int) -> int:
        """Red degree of v plus the number of blue r-cliques containing v."""
        blue = self.blue_subgraph()
        return self.d_red(v) + _cliques_through_vertex(blue, v, r)


# ---------------------------------------------------------------------------
# Clique counting
# ---------------------------------------------------------------------------

def _degeneracy_order(adj: tuple[int, ...], n: int) -> list[int]:
    """Vertex order by repeatedly removing a minimum-degree vertex (ties by index)."""
    alive = (1 << n) - 1
    order = []
    for _ in range(n):
        best = -1
        best_deg = n + 1
        for v in range(n):
            if alive >> v & 1:
                d = (adj[v] & alive).bit_count()
                if d < best_deg:
                    best, best_deg = v, d
        order.append(best)
        alive &= ~(1 << best)
    return order


def _count_in(adj: tuple[int, ...], cand: int, need: int) -> int:
    """Number of `need`-cliques inside the candidate mask, extending recursively."""
    if need == 1:
        return cand.bit_count()
    if cand.bit_count() < need:
        return 0
    total = 0
    m = cand
    while m:
        low = m & -m
        u = low.bit_length() - 1
        m ^= low
        # only extend with vertices after u inside cand, so each clique counts once
        total += _count_in(adj, adj[u] & m, need - 1)
    return total


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-vertex complete subgraphs of g (r > n gives 0)."""
    if r < 1:
        raise ValueError(f"clique size must be >= 1, got {r}")
    if r > g.n:
        return 0
    if r == 1:
        return g.n
    adj = g.adjacency
    order = _degeneracy_order(adj, g.n)
    later = [0] * g.n
    seen = 0
    for v in reversed(order):
        later[v] = adj[v] & seen
        seen |= 1 << v
    return sum(_count_in(adj, later[v], r - 1) for v in range(g.n))


def _cliques_through_vertex(g: Graph, v: int, r: int) -> int:
    """Number of r-cliques of g that contain v."""
    if r < 1 or r > g.n:
        return 0
    if r == 1:
        return 1
    return _count_in(g.adjacency, g.adjacency[v], r - 1)


def g_r(g: RedBlueGraph, r: int) -> int:
    """Red edge count plus the number of r-cliques in the blue subgraph."""
    if r < 2:
        raise ValueError(f"uniformity must be >= 2, got {r}")
    return g.red_count + count_cliques(g.blue_subgraph(), r)


# ---------------------------------------------------------------------------
# Subgraph containment and counting (not necessarily induced)
# ---------------------------------------------------------------------------

def _pattern_order(f: Graph) -> list[int]:
    """Max-degree-first BFS order over the pattern (restarting per component)."""
    degs = [f.degree(v) for v in range(f.n)]
    seen = [False] * f.n
    order: list[int] = []
    while len(order) < f.n:
        root = max((v for v in range(f.n) if not seen[v]),
                   key=lambda v: (degs[v], -v))
        seen[root] = True
        queue = [root]
        while queue:
            v = queue.pop(0)
            order.append(v)
            nbrs = sorted((w for w in range(f.n) if f.has_edge(v, w) and not seen[w]),
                          key=lambda w: (-degs[w], w))
            for w in nbrs:
                seen[w] = True
                queue.append(w)
    return order


def _extend_embedding(g: Graph, f: Graph, order: list[int], image: dict[int, int],
                      used: int, pos: int):
    """Yield all completions of a partial injective edge-preserving map."""
    if pos == len(order):
        yield dict(image)
        return
    v = order[pos]
    fdeg = f.degree(v)
    cand = ((1 << g.n) - 1) & ~used
    for u in range(f.n):
        if u in image and f.has_edge(u, v):
            cand &= g.adjacency[image[u]]
    m = cand
    while m:
        low = m & -m
        x = low.bit_length() - 1
        m ^= low
        if g.degree(x) < fdeg:
            continue
        image[v] = x
        yield from _extend_embedding(g, f, order, image, used | (1 << x), pos + 1)
        del image[v]


def _embeddings(g: Graph, f: Graph, seed: dict[int, int] | None = None):
    """All injective maps V(f) -> V(g) sending edges to edges, optionally seeded."""
    if f.n > g.n or len(f.edges) > len(g.edges):
        return
    image = dict(seed) if seed else {}
    used = 0
    for x in image.values():
        used |= 1 << x
    order = [v for v in _pattern_order(f) if v not in image]
    # seeded pairs must already respect adjacency
    for (a, b) in f.edges:
        if a in image and b in image and not g.has_edge(image[a], image[b]):
            return
    yield from _extend_embedding(g, f, list(image) + order, image, used, len(image))


def _has_clique(g: Graph, k: int) -> bool:
    if k > g.n:
        return False
    if k <= 1:
        return g.n >= k
    adj = g.adjacency
    order = _degeneracy_order(adj, g.n)
    later = [0] * g.n
    seen = 0
    for v in reversed(order):
        later[v] = adj[v] & seen
        seen |= 1 << v

    def grow(cand: int, need: int) -> bool:
        if need == 0:
            return True
        if cand.bit_count() < need:
            return False
        m = cand
        while m:
            low = m & -m
            u = low.bit_length() - 1
            m ^= low
            if grow(adj[u] & m, need - 1):
                return True
        return False

    return any(grow(later[v], k - 1) for v in range(g.n))


def contains_subgraph(g: Graph, f: Graph) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to f."""
    if f.is_complete():
        return _has_clique(g, f.n)
    return next(_embeddings(g, f), None) is not None


def count_automorphisms(h: Graph) -> int:
    """Order of the automorphism group, by exhausting edge-preserving bijections."""
    return sum(1 for _ in _embeddings(h, h))


def count_subgraphs(g: Graph, h: Graph) -> int:
    """Number of distinct subgraphs of g isomorphic to h (unlabeled copies)."""
    if h.is_complete():
        return count_cliques(g, h.n)
    labeled = sum(1 for _ in _embeddings(g, h))
    return labeled // count_automorphisms(h)


# ---------------------------------------------------------------------------
# Canonical forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Total-order key identifying an isomorphism class; equal keys iff isomorphic."""

    key: bytes = field(compare=True)

    def __lt__(self, other: CanonicalForm) -> bool:
        return self.key < other.key


def _refine(n: int, edges: tuple[tuple[int, ...], ...]) -> list[int]:
    """Iterated color refinement; colors are ranks of label-independent signatures."""
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(n)]
    for e in edges:
        for v in e:
            incident[v].append(e)
    colors = [0] * n
    while True:
        sigs = []
        for v in range(n):
            profile = sorted(
                tuple(sorted(colors[w] for w in e if w != v)) for e in incident[v]
            )
            sigs.append((colors[v], tuple(profile)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


@lru_cache(maxsize=None)
def _colex_position_combos(i: int, size: int) -> tuple[tuple[int, ...], ...]:
    """(size)-subsets of positions 0..i-1 in colex order."""
    combos = itertools.combinations(range(i), size)
    return tuple(sorted(combos, key=lambda c: c[::-1]))


def _canonical_bits(n: int, r: int, edges: tuple[tuple[int, ...], ...]) -> bytes:
    """Minimal colex incidence bitvector over all refinement-consistent orderings.

    Placing canonical positions 0..i determines exactly the bits of r-sets
    inside the placed prefix (a contiguous colex prefix), which allows
    segment-by-segment pruning against the best labeling found so far.
    """
    edge_set = frozenset(frozenset(e) for e in edges)
    colors = _refine(n, edges)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    position_color = []
    for c in sorted(cells):
        position_color.extend([c] * len(cells[c]))

    best: list[int] | None = None
    placed: list[int] = []
    segments: list[int] = []
    swap_cache: dict[tuple[int, int], bool] = {}

    def interchangeable(u: int, w: int) -> bool:
        """Is the transposition (u w) an automorphism?  Such candidates
        produce identical subtrees, so only the first needs exploring."""
        key = (u, w) if u < w else (w, u)
        hit = swap_cache.get(key)
        if hit is None:
            swap = {u: w, w: u}
            hit = edge_set == frozenset(
                frozenset(swap.get(v, v) for v in e) for e in edge_set)
            swap_cache[key] = hit
        return hit

    def segment_for(v: int) -> int:
        i = len(placed)
        seg = 0
        for positions in _colex_position_combos(i, r - 1):
            members = frozenset(placed[p] for p in positions) | {v}
            seg = (seg << 1) | (1 if members in edge_set else 0)
        return seg

    def rec(unplaced_by_color: dict[int, list[int]]) -> None:
        nonlocal best
        i = len(placed)
        if i == n:
            if best is None or segments < best:
                best = segments.copy()
            return
        color = position_color[i]
        candidates = list(unplaced_by_color[color])
        for pos, v in enumerate(candidates):
            if any(interchangeable(u, v) for u in candidates[:pos]):
                continue
            seg = segment_for(v)
            # prune when the extended prefix already exceeds the incumbent;
            # comparing against the live best stays valid after updates
            if best is not None and segments + [seg] > best[: i + 1]:
                continue
            placed.append(v)
            segments.append(seg)
            unplaced_by_color[color].remove(v)
            rec(unplaced_by_color)
            unplaced_by_color[color].append(v)
            unplaced_by_color[color].sort()
            placed.pop()
            segments.pop()

    rec({c: sorted(vs) for c, vs in cells.items()})
    assert best is not None
    bits = 0
    for i, seg in enumerate(best):
        width = len(_colex_position_combos(i, r - 1))
        bits = (bits << width) | seg
    total = comb(n, r)
    return bytes([n & 0xFF, r & 0xFF]) + bits.to_bytes(max(1, (total + 7) // 8), "big")


def canonical_form(x: Graph | Hypergraph) -> CanonicalForm:
    """Isomorphism-invariant key, minimal over vertex relabelings."""
    if isinstance(x, Graph):
        return CanonicalForm(b"G" + _canonical_bits(x.n, 2, x.edges))
    if isinstance(x, Hypergraph):
        return CanonicalForm(b"H" + _canonical_bits(x.n, x.r, x.edges))
    raise TypeError(f"cannot canonicalize {type(x).__name__}")


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def graph_to_text(g: Graph) -> str:
    lines = [f"{g.n} {len(g.edges)}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    tokens = [line.split() for line in text.splitlines() if line.strip()]
    if not tokens or len(tokens[0]) != 2:
        raise ValueError("graph header must be 'n m'")
    n, m = map(int, tokens[0])
    if len(tokens) - 1 != m:
        raise ValueError(f"expected {m} edge lines, found {len(tokens) - 1}")
    edges = []
    for row in tokens[1:]:
        if len(row) != 2:
            raise ValueError(f"edge line must have 2 entries: {' '.join(row)!r}")
        u, v = map(int, row)
        if u >= v:
            raise ValueError(f"edge endpoints must satisfy u < v: {u} {v}")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate edge in graph file")
    return Graph(n, edges)


def hypergraph_to_text(h: Hypergraph) -> str:
    lines = [f"{h.n} {h.r} {len(h.edges)}"]
    lines.extend(" ".join(map(str, e)) for e in h.edges)
    return "\n".join(lines) + "\n"


def hypergraph_from_text(text: str) -> Hypergraph:
    tokens = [line.split() for line in text.splitlines() if line.strip()]
    if not tokens or len(tokens[0]) != 3:
        raise ValueError("hypergraph header must be 'n r m'")
    n, r, m = map(int, tokens[0])
    if len(tokens) - 1 != m:
        raise ValueError(f"expected {m} hyperedge lines, found {len(tokens) - 1}")
    edges = []
    for row in tokens[1:]:
        if len(row) != r:
            raise ValueError(f"hyperedge line must have {r} entries: {' '.join(row)!r}")
        e = tuple(map(int, row))
        if list(e) != sorted(set(e)):
            raise ValueError(f"hyperedge must list distinct ascending vertices: {row}")
        edges.append(e)
    if len(set(edges)) != len(edges):
        raise ValueError("duplicate hyperedge in file")
    return Hypergraph(n, r, edges)
