"""Zykov symmetrization on red-blue graphs, driving g_r upward.

A symmetrization step replaces one vertex's incidence (or one class's
colors toward the other classes) by a colored copy of another's; it
preserves K_k-freeness because any new clique through the rewritten vertex
would already exist through its template.  `zykov_run` greedily applies
any move that strictly increases the lexicographic objective

    (g_r, edge count, red edge count, d_red(v_0), ..., d_red(v_{n-1})),

drawn from: class-to-class symmetrization, whole-class recoloring to red,
recoloring a red-joined class pair to blue, vertex-to-vertex
symmetrization, and single-edge recoloring.  Each component is a bounded
integer, so strict lexicographic ascent terminates.

The single-edge recolor move is a degenerate class recolor needed by the
greedy schedule: from an all-blue triangle-free start every classical move
ties the objective, yet a red flip strictly improves it.  Endpoints are
greedy local maxima; globally maximal g_r is recovered by running from a
covering family of start points (the search module's max_g_r provides the
reference value).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import BLUE, RED, Graph, RedBlueGraph, contains_subgraph, g_r

__all__ = [
    "SymmetrizationStep",
    "SymmetrizationTrace",
    "symmetrize_vertex",
    "symmetrize_class",
    "zykov_run",
    "multipartite_classes",
    "class_color_table",
    "is_monochromatic",
    "objective",
]


@dataclass(frozen=True)
class SymmetrizationStep:
    kind: str
    operands: tuple
    g_r_before: int
    g_r_after: int
    edges_before: int
    edges_after: int
    red_before: int
    red_after: int

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "operands": [list(op) if isinstance(op, tuple) else op
                         for op in self.operands],
            "gr": [self.g_r_before, self.g_r_after],
            "edges": [self.edges_before, self.edges_after],
            "red": [self.red_before, self.red_after],
        }


@dataclass(frozen=True)
class SymmetrizationTrace:
    steps: tuple[SymmetrizationStep, ...]
    final: RedBlueGraph


def objective(g: RedBlueGraph, r: int) -> tuple:
    """The lexicographic potential driving the greedy ascent."""
    reds = g.red_count
    return (g_r(g, r), len(g.graph.edges), reds,
            tuple(g.d_red(v) for v in range(g.graph.n)))


def symmetrize_vertex(g: RedBlueGraph, u: int, v: int) -> RedBlueGraph:
    """Replace u's incidence by a colored copy of v's (u, v non-adjacent)."""
    if u == v:
        raise ValueError("cannot symmetrize a vertex to itself")
    if g.graph.has_edge(u, v):
        raise ValueError(f"vertices {u} and {v} are adjacent")
    edges = []
    colors = []
    for (a, b), c in zip(g.graph.edges, g.colors):
        if u in (a, b):
            continue
        edges.append((a, b))
        colors.append(c)
    for w in range(g.graph.n):
        if w != u and g.graph.has_edge(v, w):
            edges.append((min(u, w), max(u, w)))
            colors.append(g.color_of(v, w))
    order = sorted(range(len(edges)), key=lambda i: edges[i])
    graph = Graph(g.graph.n, [edges[i] for i in order])
    return RedBlueGraph(graph, [colors[i] for i in order])


def multipartite_classes(g: Graph) -> list[tuple[int, ...]] | None:
    """Classes of a complete multipartite graph, or None if g is not one.

    Components of the complement are the candidate classes; g is complete
    multipartite iff each is an independent set of g (equivalently a
    clique in the complement).
    """
    comp = g.complement_adjacency()
    seen = [False] * g.n
    classes = []
    for v in range(g.n):
        if seen[v]:
            continue
        stack = [v]
        seen[v] = True
        members = []
        while stack:
            x = stack.pop()
            members.append(x)
            m = comp[x]
            while m:
                low = m & -m
                w = low.bit_length() - 1
                m ^= low
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        members.sort()
        for a in members:
            for b in members:
                if a < b and g.has_edge(a, b):
                    return None
        classes.append(tuple(members))
    classes.sort()
    return classes


def class_color_table(g: RedBlueGraph,
                      classes: list[tuple[int, ...]]) -> dict[tuple[int, int], str] | None:
    """Color per class pair when every pair is monochromatic, else None."""
    table: dict[tuple[int, int], str] = {}
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            colors = {g.color_of(a, b) for a in classes[i] for b in classes[j]}
            if len(colors) != 1:
                return None
            table[(i, j)] = colors.pop()
    return table


def is_monochromatic(g: RedBlueGraph) -> bool:
    return len(set(g.colors)) <= 1


def symmetrize_class(g: RedBlueGraph, a: tuple[int, ...],
                     b: tuple[int, ...]) -> RedBlueGraph:
    """Recolor a's edges toward every other class with b's colors.

    Requires a complete multipartite underlying graph with monochromatic
    class pairs, and a, b joined by red edges.  The underlying graph does
    not change.
    """
    classes = multipartite_classes(g.graph)
    if classes is None:
        raise ValueError("graph is not complete multipartite")
    table = class_color_table(g, classes)
    if table is None:
        raise ValueError("some class pair is not monochromatic")
    if tuple(a) not in classes or tuple(b) not in classes or a == b:
        raise ValueError("operands must be two distinct classes")
    ia, ib = classes.index(tuple(a)), classes.index(tuple(b))
    if table[(min(ia, ib), max(ia, ib))] != RED:
        raise ValueError("classes must be joined by red edges")
    member = {}
    for idx, cls in enumerate(classes):
        for v in cls:
            member[v] = idx
    colors = list(g.colors)
    for pos, (u, w) in enumerate(g.graph.edges):
        cu, cw = member[u], member[w]
        if ia in (cu, cw) and ib not in (cu, cw):
            other = cw if cu == ia else cu
            colors[pos] = table[(min(ib, other), max(ib, other))]
    return RedBlueGraph(g.graph, colors)


# ---------------------------------------------------------------------------
# Greedy run
# ---------------------------------------------------------------------------

def _recolor_class_red(g: RedBlueGraph, cls: tuple[int, ...]) -> RedBlueGraph:
    colors = [RED if (u in cls or w in cls) else c
              for (u, w), c in zip(g.graph.edges, g.colors)]
    return RedBlueGraph(g.graph, colors)


def _recolor_pair(g: RedBlueGraph, a: tuple[int, ...], b: tuple[int, ...],
                  color: str) -> RedBlueGraph:
    sa, sb = set(a), set(b)
    colors = [color if ((u in sa and w in sb) or (u in sb and w in sa)) else c
              for (u, w), c in zip(g.graph.edges, g.colors)]
    return RedBlueGraph(g.graph, colors)


def _candidate_moves(g: RedBlueGraph):
    """Deterministic move stream: class moves first, then vertex moves,
    then single-edge recolors; lowest-index operands first."""
    classes = multipartite_classes(g.graph)
    if classes is not None and len(classes) > 1:
        table = class_color_table(g, classes)
        if table is not None:
            for i in range(len(classes)):
                for j in range(len(classes)):
                    if i != j and table[(min(i, j), max(i, j))] == RED:
                        yield ("class-sym", (classes[i], classes[j]),
                               symmetrize_class(g, classes[i], classes[j]))
            for cls in classes:
                yield ("class-red", (cls,), _recolor_class_red(g, cls))
            for i in range(len(classes)):
                for j in range(i + 1, len(classes)):
                    if table[(i, j)] == RED:
                        yield ("pair-blue", (classes[i], classes[j]),
                               _recolor_pair(g, classes[i], classes[j], BLUE))
    for u in range(g.graph.n):
        for v in range(g.graph.n):
            if u != v and not g.graph.has_edge(u, v):
                yield ("vertex-sym", (u, v), symmetrize_vertex(g, u, v))
    for pos, ((u, w), c) in enumerate(zip(g.graph.edges, g.colors)):
        flipped = list(g.colors)
        flipped[pos] = RED if c == BLUE else BLUE
        yield ("edge-flip", ((u, w),), RedBlueGraph(g.graph, flipped))


def zykov_run(g0: RedBlueGraph, k: int, r: int,
              verify: bool = False) -> SymmetrizationTrace:
    """Greedy strict-improvement run from g0 (which must be K_k-free).

    Applies the first candidate move that strictly increases the
    lexicographic objective, until none does.  With verify=True the
    K_k-freeness of every intermediate graph is re-checked.
    """
    clique = Graph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))
    if contains_subgraph(g0.graph, clique):
        raise ValueError("start graph contains K_k")
    g = g0
    steps: list[SymmetrizationStep] = []
    current = objective(g, r)
    while True:
        for kind, operands, candidate in _candidate_moves(g):
            nxt = objective(candidate, r)
            if nxt > current:
                if verify and contains_subgraph(candidate.graph, clique):
                    raise AssertionError(f"move {kind}{operands} broke K_k-freeness")
                steps.append(SymmetrizationStep(
                    kind, operands, current[0], nxt[0], current[1], nxt[1],
                    current[2], nxt[2]))
                g = candidate
                current = nxt
                break
        else:
            return SymmetrizationTrace(tuple(steps), g)
