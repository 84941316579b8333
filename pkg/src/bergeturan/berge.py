"""Berge containment testing, red-blue shadow decomposition, tree embedding.

A hypergraph H contains a Berge copy of a graph F when there is an injective
core map V(F) -> V(H) and an injective assignment of the edges of F to
hyperedges, each hyperedge containing the image of its edge's endpoints.
`contains_berge` searches core maps by backtracking and decides the edge
assignment as a bipartite matching between pattern edges and the hyperedges
covering their image pairs; partial matching feasibility is rechecked at
every core extension step, which prunes hopeless branches early.

`decompose_red_blue` converts any hypergraph H into a red-blue shadow graph
G with |E(H)| <= g_r(G): match hyperedges to the vertex pairs they cover,
classify the auxiliary bipartite graph by alternating paths, color the
matched pairs tied to the unmatched side red and the rest blue.  Hyperedges
left out of the red count then span pairwise-distinct blue r-cliques.  When
H is Berge-F-free the shadow is F-free as well, because each shadow edge
carries a distinct witnessing hyperedge.

`greedy_berge_tree_embed` follows the private-hyperedge strategy for trees
T on k+1 <= r+1 vertices: give every vertex d = maxdeg(T)-1 private
incident hyperedges (disjoint across vertices), embed T leaf-first along
backward neighbors using unused private hyperedges, and resolve the single
possible collision at the last vertex when r = k by swapping the parent
edge's representative.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import BLUE, RED, Graph, Hypergraph, RedBlueGraph, g_r
from .matching import (
    BipartiteIncidence,
    assign_private_sets,
    classify_alternating,
    hall_violator,
    maximum_matching,
)

__all__ = [
    "BergeCertificate",
    "RedBlueDecomposition",
    "BudgetExhaustedError",
    "contains_berge",
    "check_certificate",
    "decompose_red_blue",
    "greedy_berge_tree_embed",
    "tree_degree_violator",
    "find_berge_tree",
    "is_tree",
]


class BudgetExhaustedError(RuntimeError):
    """Raised when a containment search exceeds its node budget.

    Deliberately distinct from an absent result: callers must never treat
    an aborted search as evidence of Berge-freeness.
    """


@dataclass(frozen=True)
class BergeCertificate:
    """Witness of a Berge copy: injective core map plus injective edge map."""

    core_map: tuple[tuple[int, int], ...]
    edge_map: tuple[tuple[tuple[int, int], int], ...]

    def core_dict(self) -> dict[int, int]:
        return dict(self.core_map)

    def to_json_dict(self) -> dict:
        return {
            "coreMap": [[v, u] for v, u in self.core_map],
            "edgeMap": [[[a, b], i] for (a, b), i in self.edge_map],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> BergeCertificate:
        core = tuple((int(v), int(u)) for v, u in data["coreMap"])
        edges = tuple(((int(a), int(b)), int(i)) for (a, b), i in data["edgeMap"])
        return cls(core, edges)


def check_certificate(h: Hypergraph, f: Graph, cert: BergeCertificate) -> bool:
    """Independent validity check: injectivity and per-edge containment."""
    core = dict(cert.core_map)
    if len(core) != f.n or set(core) != set(range(f.n)):
        return False
    if len(set(core.values())) != f.n:
        return False
    if any(not 0 <= u < h.n for u in core.values()):
        return False
    edge_map = dict()
    for (a, b), idx in cert.edge_map:
        key = (min(a, b), max(a, b))
        if key in edge_map:
            return False
        edge_map[key] = idx
    if set(edge_map) != set(f.edges):
        return False
    used = list(edge_map.values())
    if len(set(used)) != len(used):
        return False
    for (a, b), idx in edge_map.items():
        if not 0 <= idx < len(h.edges):
            return False
        members = set(h.edges[idx])
        if core[a] not in members or core[b] not in members:
            return False
    return True


# ---------------------------------------------------------------------------
# Berge containment search
# ---------------------------------------------------------------------------

class _Budget:
    __slots__ = ("remaining",)

    def __init__(self, limit: int | None):
        self.remaining = limit

    def spend(self) -> None:
        if self.remaining is not None:
            if self.remaining <= 0:
                raise BudgetExhaustedError("containment search budget exhausted")
            self.remaining -= 1


def _pattern_search_order(f: Graph, seeded: tuple[int, ...]) -> list[int]:
    """Max-degree-first BFS over f, starting from any seeded vertices."""
    degs = [f.degree(v) for v in range(f.n)]
    seen = [False] * f.n
    order: list[int] = []
    queue: list[int] = []
    for v in seeded:
        seen[v] = True
        queue.append(v)
    while len(order) + len(seeded) < f.n or queue:
        if not queue:
            root = max((v for v in range(f.n) if not seen[v]),
                       key=lambda v: (degs[v], -v))
            seen[root] = True
            queue.append(root)
        v = queue.pop(0)
        if v not in seeded:
            order.append(v)
        for w in sorted((w for w in range(f.n) if f.has_edge(v, w) and not seen[w]),
                        key=lambda w: (-degs[w], w)):
            seen[w] = True
            queue.append(w)
    return order


class _BergeSearch:
    """Backtracking core-map search with incremental matching feasibility."""

    def __init__(self, h: Hypergraph, f: Graph, budget: _Budget):
        self.h = h
        self.f = f
        self.budget = budget
        self.pair_edges = h.pair_cover
        self.hdeg = [h.degree(v) for v in range(h.n)]
        self.image: dict[int, int] = {}
        self.used = 0
        # matching state: pattern edge -> hyperedge index
        self.match: dict[tuple[int, int], int] = {}
        self.owner: dict[int, tuple[int, int]] = {}

    def candidates(self, u: int, v: int) -> int:
        a, b = (u, v) if u < v else (v, u)
        return self.pair_edges.get((a, b), 0)

    def _try_match(self, edge: tuple[int, int], visited: set[int]) -> bool:
        a, b = edge
        mask = self.candidates(self.image[a], self.image[b])
        while mask:
            low = mask & -mask
            idx = low.bit_length() - 1
            mask ^= low
            if idx in visited:
                continue
            visited.add(idx)
            if idx not in self.owner or self._try_match(self.owner[idx], visited):
                self.owner[idx] = edge
                self.match[edge] = idx
                return True
        return False

    def place(self, v: int, x: int) -> bool:
        """Assign pattern vertex v to host vertex x; keep matching saturated."""
        self.image[v] = x
        self.used |= 1 << x
        snapshot = (dict(self.match), dict(self.owner))
        for w in range(self.f.n):
            if w in self.image and self.f.has_edge(v, w):
                edge = (min(v, w), max(v, w))
                if not self._try_match(edge, set()):
                    self.match, self.owner = snapshot
                    del self.image[v]
                    self.used &= ~(1 << x)
                    return False
        return True

    def unplace(self, v: int, snapshot) -> None:
        x = self.image.pop(v)
        self.used &= ~(1 << x)
        self.match, self.owner = snapshot

    def extend(self, order: list[int], pos: int) -> bool:
        if pos == len(order):
            return True
        self.budget.spend()
        v = order[pos]
        placed_nbrs = [w for w in range(self.f.n)
                       if w in self.image and self.f.has_edge(v, w)]
        cand = [x for x in range(self.h.n) if not self.used >> x & 1]
        cand = [x for x in cand
                if all(self.candidates(self.image[w], x) for w in placed_nbrs)]
        cand.sort(key=lambda x: (-self.hdeg[x], x))
        for x in cand:
            snapshot = (dict(self.match), dict(self.owner))
            if self.place(v, x):
                if self.extend(order, pos + 1):
                    return True
                self.unplace(v, snapshot)
        return False

    def certificate(self) -> BergeCertificate:
        core = tuple(sorted(self.image.items()))
        edge_map = tuple(sorted((e, self.match[e]) for e in self.f.edges))
        return BergeCertificate(core, edge_map)


def contains_berge(h: Hypergraph, f: Graph, node_budget: int | None = None,
                   anchor: int | None = None) -> BergeCertificate | None:
    """Certificate for a Berge copy of f in h, or None when h is Berge-f-free.

    With `anchor` set to a hyperedge index, only copies whose edge
    assignment could use that hyperedge are sought (some pattern edge has
    both endpoint images inside it); this is the incremental recheck used
    by the search module, valid when h minus the anchor is already known
    Berge-f-free.  Raises BudgetExhaustedError when node_budget runs out.
    """
    if f.n > h.n:
        return None
    if not f.edges:
        core = tuple((v, v) for v in range(f.n))
        return BergeCertificate(core, ())
    if len(h.edges) < len(f.edges):
        return None
    budget = _Budget(node_budget)
    if anchor is None:
        search = _BergeSearch(h, f, budget)
        order = _pattern_search_order(f, ())
        if search.extend(order, 0):
            return search.certificate()
        return None
    members = h.edges[anchor]
    for (a, b) in f.edges:
        for x, y in itertools.permutations(members, 2):
            search = _BergeSearch(h, f, budget)
            if not search.place(a, x):
                continue
            if not search.place(b, y):
                continue
            order = _pattern_search_order(f, (a, b))
            if search.extend(order, 0):
                return search.certificate()
    return None


# ---------------------------------------------------------------------------
# Red-blue shadow decomposition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RedBlueDecomposition:
    """Shadow graph with |E(H)| <= bound = g_r(shadow); every shadow edge
    records a witnessing hyperedge, distinct across edges."""

    shadow: RedBlueGraph
    pair_origin: tuple[tuple[tuple[int, int], int], ...]
    bound: int

    def origin_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.pair_origin)


def decompose_red_blue(h: Hypergraph) -> RedBlueDecomposition:
    """Shadow construction from a maximum hyperedge-to-pair matching.

    Matched pairs span the shadow; when the matching misses some
    hyperedges, pairs whose alternating class is tied to the unmatched
    pairs (B2) are red and the remaining matched pairs blue, otherwise
    everything is red.  The inequality |E(H)| <= g_r(shadow) is re-verified
    numerically before returning.
    """
    pairs = sorted(h.pair_cover)
    pair_index = {p: i for i, p in enumerate(pairs)}
    adj = []
    for e in h.edges:
        adj.append(tuple(sorted(pair_index[p] for p in itertools.combinations(e, 2))))
    x = BipartiteIncidence(len(h.edges), len(pairs), adj)
    m = maximum_matching(x)
    matched = m.as_dict()

    colors: dict[tuple[int, int], str] = {}
    origin: dict[tuple[int, int], int] = {}
    if m.size == len(h.edges):
        for a, b in m.pairs:
            colors[pairs[b]] = RED
            origin[pairs[b]] = a
    else:
        classes = classify_alternating(x, m)
        _, b2, b3, b4 = classes.right_classes
        for a, b in m.pairs:
            colors[pairs[b]] = RED if b in b2 else BLUE
            origin[pairs[b]] = a
        assert set().union(b2, b3, b4) == {b for _, b in m.pairs}
    shadow_graph = Graph(h.n, tuple(colors))
    shadow = RedBlueGraph(shadow_graph, colors)
    bound = g_r(shadow, h.r) if h.r >= 2 else 0
    if len(h.edges) > bound:
        raise AssertionError("shadow bound fell below the hyperedge count")
    for p, a in origin.items():
        assert set(p) <= set(h.edges[a])
    return RedBlueDecomposition(shadow, tuple(sorted(origin.items())), bound)


# ---------------------------------------------------------------------------
# Greedy Berge-tree embedding
# ---------------------------------------------------------------------------

def is_tree(t: Graph) -> bool:
    if t.n == 0 or len(t.edges) != t.n - 1:
        return False
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in range(t.n):
            if t.has_edge(v, w) and w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == t.n


def _leaf_first_order(t: Graph) -> tuple[list[int], dict[int, int]]:
    """Order starting at the smallest leaf; each later vertex has a unique
    earlier neighbor (its backward neighbor)."""
    leaves = [v for v in range(t.n) if t.degree(v) == 1]
    root = min(leaves) if leaves else 0
    order = [root]
    backward: dict[int, int] = {}
    queue = [root]
    seen = {root}
    while queue:
        v = queue.pop(0)
        for w in range(t.n):
            if t.has_edge(v, w) and w not in seen:
                seen.add(w)
                backward[w] = v
                order.append(w)
                queue.append(w)
    return order, backward


def _vertex_edge_incidence(h: Hypergraph) -> BipartiteIncidence:
    adj = [tuple(i for i in range(len(h.edges)) if h.incidence[v] >> i & 1)
           for v in range(h.n)]
    return BipartiteIncidence(h.n, len(h.edges), adj)


def tree_degree_violator(h: Hypergraph, t: Graph) -> frozenset[int] | None:
    """Vertex set S incident to fewer than (maxdeg(T)-1)|S| hyperedges, if any."""
    d = max((t.degree(v) for v in range(t.n)), default=0) - 1
    if d < 1:
        return None
    return hall_violator(_vertex_edge_incidence(h), d)


def greedy_berge_tree_embed(h: Hypergraph, t: Graph) -> BergeCertificate | None:
    """Greedy Berge-tree embedding via disjoint private hyperedge sets.

    Requires a tree t on k+1 <= r+1 vertices.  Returns None exactly when
    the degree condition fails (every vertex set S must be incident to at
    least (maxdeg(t)-1)|S| hyperedges); this is not a freeness verdict and
    callers should fall back to contains_berge.  Otherwise the embedding
    always succeeds and the certificate is validated before returning.
    """
    if not is_tree(t):
        raise ValueError("pattern must be a tree")
    k = t.n - 1
    if k > h.r:
        raise ValueError(f"tree on {t.n} vertices needs uniformity >= {k}, got {h.r}")
    if k == 1:
        if not h.edges:
            return None
        e = h.edges[0]
        cert = BergeCertificate(((0, e[0]), (1, e[1])), (((0, 1), 0),))
        assert check_certificate(h, t, cert)
        return cert

    delta = max(t.degree(v) for v in range(t.n))
    d = delta - 1
    private, violator = assign_private_sets(_vertex_edge_incidence(h), d)
    if private is None:
        return None

    order, backward = _leaf_first_order(t)
    image: dict[int, int] = {order[0]: 0}
    edge_map: dict[tuple[int, int], int] = {}
    used: set[int] = set()

    def tree_edge(a: int, b: int) -> tuple[int, int]:
        return (a, b) if a < b else (b, a)

    for i, v in enumerate(order[1:], start=2):
        parent = backward[v]
        up = image[parent]
        pool = sorted(e for e in private[up] if e not in used)
        assert pool, "private set exhausted; counting argument violated"
        chosen = None
        for e in pool:
            outside = sorted(set(h.edges[e]) - set(image.values()))
            if outside:
                chosen = (e, outside[0])
                break
        if chosen is not None:
            e, new_vertex = chosen
            image[v] = new_vertex
            edge_map[tree_edge(parent, v)] = e
            used.add(e)
            continue
        # only the last vertex of a tree with r = k can collide; swap the
        # parent edge's representative to free a hyperedge with a new vertex
        assert i == k + 1 and h.r == k, "unexpected dead end in tree embedding"
        e = pool[0]
        grandparent = backward.get(parent)
        assert grandparent is not None, "terminal swap reached at the root"
        prior = edge_map[tree_edge(grandparent, parent)]
        outside = sorted(set(h.edges[prior]) - set(image.values()))
        assert outside, "swap target contains no fresh vertex"
        image[v] = outside[0]
        edge_map[tree_edge(grandparent, parent)] = e
        edge_map[tree_edge(parent, v)] = prior
        used.add(e)

    cert = BergeCertificate(tuple(sorted(image.items())),
                            tuple(sorted(edge_map.items())))
    assert check_certificate(h, t, cert)
    return cert


def find_berge_tree(h: Hypergraph, t: Graph,
                    node_budget: int | None = None) -> BergeCertificate | None:
    """Greedy embedding when the degree condition holds, else the exact search."""
    if is_tree(t) and t.n - 1 <= h.r:
        cert = greedy_berge_tree_embed(h, t)
        if cert is not None:
            return cert
    return contains_berge(h, t, node_budget=node_budget)
