import itertools
import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergeturan.core import (
    BLUE,
    RED,
    Graph,
    Hypergraph,
    RedBlueGraph,
    canonical_form,
    contains_subgraph,
    count_automorphisms,
    count_cliques,
    count_subgraphs,
    g_r,
    graph_from_text,
    graph_to_text,
    hypergraph_from_text,
    hypergraph_to_text,
)
from bergeturan.constructions import turan_graph

import brute


def complete_graph(n):
    return Graph(n, itertools.combinations(range(n), 2))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

def test_graph_rejects_loops_duplicates_and_range():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_hypergraph_rejects_bad_edges():
    with pytest.raises(ValueError):
        Hypergraph(4, 3, [(0, 1)])
    with pytest.raises(ValueError):
        Hypergraph(4, 3, [(0, 1, 1)])
    with pytest.raises(ValueError):
        Hypergraph(4, 3, [(0, 1, 2), (2, 1, 0)])
    with pytest.raises(ValueError):
        Hypergraph(4, 1, [(0,)])


def test_redblue_requires_total_coloring():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(ValueError):
        RedBlueGraph(g, (RED,))
    with pytest.raises(ValueError):
        RedBlueGraph(g, {(0, 1): RED})
    with pytest.raises(ValueError):
        RedBlueGraph(g, (RED, "green"))


# ---------------------------------------------------------------------------
# clique counting
# ---------------------------------------------------------------------------

def test_count_cliques_examples():
    assert count_cliques(complete_graph(4), 3) == 4
    assert count_cliques(Graph(5), 2) == 0
    assert count_cliques(turan_graph(5, 3), 3) == 4  # parts 2,2,1


def test_count_cliques_on_complete_graphs_is_binomial():
    for n in range(1, 11):
        g = complete_graph(n)
        for r in range(1, n + 1):
            assert count_cliques(g, r) == comb(n, r)


def test_count_cliques_beyond_n_is_zero():
    assert count_cliques(complete_graph(3), 4) == 0


def test_count_cliques_matches_brute_force_on_random_graphs():
    rng = random.Random(101)
    for _ in range(40):
        g = brute.random_graph(rng, rng.randint(1, 7), rng.random())
        for r in range(1, 6):
            assert count_cliques(g, r) == brute.clique_count(g, r)


# ---------------------------------------------------------------------------
# g_r
# ---------------------------------------------------------------------------

def test_g_r_examples():
    single_red = RedBlueGraph(Graph(2, [(0, 1)]), (RED,))
    assert g_r(single_red, 3) == 1
    k4 = complete_graph(4)
    assert g_r(RedBlueGraph.monochromatic(k4, BLUE), 3) == 4
    one_red = RedBlueGraph(k4, (RED,) + (BLUE,) * 5)
    assert g_r(one_red, 3) == 3  # blue K4 minus an edge has 2 triangles


def test_g_r_agrees_with_independent_enumeration():
    rng = random.Random(7)
    for _ in range(60):
        g = brute.random_graph(rng, rng.randint(2, 7), 0.5)
        colors = tuple(rng.choice((RED, BLUE)) for _ in g.edges)
        rb = RedBlueGraph(g, colors)
        for r in (2, 3, 4):
            blue = Graph(g.n, [e for e, c in zip(g.edges, colors) if c == BLUE])
            assert g_r(rb, r) == rb.red_count + brute.clique_count(blue, r)


def test_d_star_decomposes_g_r():
    rng = random.Random(11)
    for _ in range(20):
        g = brute.random_graph(rng, 6, 0.5)
        rb = RedBlueGraph(g, tuple(rng.choice((RED, BLUE)) for _ in g.edges))
        r = 3
        total = sum(rb.d_star(v, r) for v in range(g.n))
        assert total == 2 * rb.red_count + r * count_cliques(rb.blue_subgraph(), r)


# ---------------------------------------------------------------------------
# subgraph containment and counting
# ---------------------------------------------------------------------------

def test_contains_subgraph_examples():
    c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    k3 = complete_graph(3)
    assert not contains_subgraph(c5, k3)
    p3 = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert contains_subgraph(complete_graph(4), p3)
    c5_pattern = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert contains_subgraph(brute.petersen(), c5_pattern)


def test_contains_subgraph_agrees_with_exhaustive_enumeration():
    rng = random.Random(23)
    for _ in range(120):
        g = brute.random_graph(rng, rng.randint(1, 8), rng.random())
        f = brute.random_graph(rng, rng.randint(1, 5), rng.random())
        assert contains_subgraph(g, f) == brute.has_subgraph(g, f)


def test_count_subgraphs_examples():
    assert count_subgraphs(complete_graph(4), Graph(2, [(0, 1)])) == 6
    c6 = Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    p2 = Graph(3, [(0, 1), (1, 2)])
    assert count_subgraphs(c6, p2) == 6
    assert count_subgraphs(complete_graph(5), complete_graph(3)) == 10


def test_count_subgraphs_matches_labeled_count_divided_by_automorphisms():
    rng = random.Random(31)
    patterns = [
        Graph(3, [(0, 1), (1, 2)]),
        Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)]),
        Graph(4, [(0, 1), (0, 2), (0, 3)]),
        complete_graph(3),
    ]
    for _ in range(40):
        g = brute.random_graph(rng, rng.randint(3, 7), 0.5)
        h = rng.choice(patterns)
        want = brute.labeled_embeddings(g, h) // brute.labeled_embeddings(h, h)
        assert count_subgraphs(g, h) == want


def test_automorphism_counts():
    assert count_automorphisms(complete_graph(4)) == 24
    assert count_automorphisms(Graph(3, [(0, 1), (1, 2)])) == 2
    c5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert count_automorphisms(c5) == 10


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def test_canonical_form_examples():
    assert canonical_form(Graph(3, [(0, 1), (1, 2)])) == \
        canonical_form(Graph(3, [(0, 2), (0, 1)]))
    assert canonical_form(complete_graph(3)) != \
        canonical_form(Graph(3, [(0, 1)]))
    h = Hypergraph(4, 3, itertools.combinations(range(4), 3))
    rng = random.Random(5)
    for _ in range(10):
        perm = rng.sample(range(4), 4)
        relabeled = Hypergraph(4, 3, [tuple(perm[v] for v in e) for e in h.edges])
        assert canonical_form(relabeled) == canonical_form(h)


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 7), st.data())
def test_canonical_form_invariant_under_permutation(n, data):
    pairs = list(itertools.combinations(range(n), 2))
    mask = data.draw(st.integers(0, 2 ** len(pairs) - 1))
    g = Graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
    perm = data.draw(st.permutations(range(n)))
    relabeled = Graph(n, [(perm[u], perm[v]) for u, v in g.edges])
    assert canonical_form(relabeled) == canonical_form(g)


def test_canonical_form_invariant_under_100_random_permutations():
    rng = random.Random(77)
    objects = [
        brute.random_graph(rng, 6, 0.4),
        brute.random_graph(rng, 7, 0.6),
        brute.random_hypergraph(rng, 6, 3, 8),
        brute.random_hypergraph(rng, 5, 4, 3),
    ]
    for obj in objects:
        base = canonical_form(obj)
        for _ in range(100):
            perm = rng.sample(range(obj.n), obj.n)
            if isinstance(obj, Graph):
                relabeled = Graph(obj.n, [(perm[u], perm[v]) for u, v in obj.edges])
            else:
                relabeled = Hypergraph(
                    obj.n, obj.r, [tuple(perm[v] for v in e) for e in obj.edges])
            assert canonical_form(relabeled) == base


def test_canonical_form_separates_all_classes_on_four_vertices():
    pairs = list(itertools.combinations(range(4), 2))
    keys = set()
    for mask in range(2 ** len(pairs)):
        g = Graph(4, [p for i, p in enumerate(pairs) if mask >> i & 1])
        keys.add(canonical_form(g).key)
    assert len(keys) == 11  # number of graphs on 4 vertices up to isomorphism


def test_canonical_form_is_feasible_at_twelve_vertices():
    k12 = complete_graph(12)
    c12 = Graph(12, [(i, (i + 1) % 12) for i in range(12)])
    assert canonical_form(k12) == canonical_form(k12)
    rotated = Graph(12, [((i + 5) % 12, (i + 6) % 12) for i in range(12)])
    assert canonical_form(c12) == canonical_form(rotated)
    assert canonical_form(turan_graph(12, 4)) != canonical_form(turan_graph(12, 3))


def test_canonical_form_distinguishes_graph_from_hypergraph():
    g = Graph(3, [(0, 1)])
    h = Hypergraph(3, 2, [(0, 1)])
    assert canonical_form(g) != canonical_form(h)


# ---------------------------------------------------------------------------
# text formats
# ---------------------------------------------------------------------------

def test_text_roundtrips():
    g = brute.random_graph(random.Random(3), 6, 0.5)
    assert graph_from_text(graph_to_text(g)) == g
    h = brute.random_hypergraph(random.Random(4), 6, 3, 7)
    assert hypergraph_from_text(hypergraph_to_text(h)) == h


def test_text_formats_reject_bad_input():
    with pytest.raises(ValueError):
        graph_from_text("3\n0 1\n")
    with pytest.raises(ValueError):
        graph_from_text("3 2\n0 1\n0 1\n")
    with pytest.raises(ValueError):
        graph_from_text("3 1\n1 0\n")
    with pytest.raises(ValueError):
        hypergraph_from_text("4 3 1\n0 1\n")
    with pytest.raises(ValueError):
        hypergraph_from_text("4 3 2\n0 1 2\n0 1 2\n")
    with pytest.raises(ValueError):
        hypergraph_from_text("4 3 1\n0 2 1\n")
