import itertools
import random
from math import comb

import pytest

from bergeturan.berge import BudgetExhaustedError, contains_berge
from bergeturan.bounds import BoundSpec, evaluate
from bergeturan.constructions import (
    build_pattern,
    parse_pattern_name,
    partition_construction,
    turan_graph,
    turan_hypergraph,
)
from bergeturan.core import Graph, Hypergraph, contains_subgraph, count_cliques, g_r
from bergeturan.search import (
    SearchConfig,
    construction_seed,
    max_berge_free,
    max_g_r,
    threshold_n0,
    _is_lex_least,
)

import brute


def clique(k):
    return Graph(k, itertools.combinations(range(k), 2))


# ---------------------------------------------------------------------------
# lex-least rejection
# ---------------------------------------------------------------------------

def test_lex_least_matches_exhaustive_minimization():
    rng = random.Random(83)
    n = 6
    pool = list(itertools.combinations(range(n), 3))
    for _ in range(60):
        fam = tuple(sorted(rng.sample(pool, rng.randint(1, 4))))
        smallest = min(
            tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in fam))
            for perm in itertools.permutations(range(n)))
        assert _is_lex_least(n, fam) == (smallest == fam)


# ---------------------------------------------------------------------------
# max_berge_free
# ---------------------------------------------------------------------------

def test_small_clique_values():
    res = max_berge_free(5, 3, clique(4))
    assert (res.optimum, res.exact) == (5, True)
    res = max_berge_free(5, 3, clique(5))
    assert (res.optimum, res.exact) == (9, True)
    res = max_berge_free(6, 3, clique(4),
                         SearchConfig(seed_witness=construction_seed(6, 3, clique(4))))
    assert (res.optimum, res.exact) == (8, True)
    for n in (2, 3, 4):
        assert max_berge_free(n, 3, clique(4)).optimum == comb(n, 3)


def test_optimum_matches_full_subset_enumeration():
    patterns = {
        "P1": build_pattern(parse_pattern_name("P1")),
        "P2": build_pattern(parse_pattern_name("P2")),
        "K3": clique(3),
        "S3": build_pattern(parse_pattern_name("S3")),
        "P3": build_pattern(parse_pattern_name("P3")),
        "C4": build_pattern(parse_pattern_name("C4")),
        "K4": clique(4),
    }
    for name, f in patterns.items():
        for n in (3, 4, 5):
            got = max_berge_free(n, 3, f)
            assert got.exact
            want = brute.max_berge_free_size(n, 3, f)
            assert got.optimum == want, (name, n, got.optimum, want)


def test_orderly_depth_never_changes_the_optimum():
    patterns = [clique(4), build_pattern(parse_pattern_name("S3")),
                build_pattern(parse_pattern_name("P3"))]
    for f in patterns:
        for n in (5, 6):
            base = max_berge_free(n, 3, f, SearchConfig(orderly_depth=0))
            pruned = max_berge_free(n, 3, f, SearchConfig(orderly_depth=4))
            assert base.exact and pruned.exact
            assert base.optimum == pruned.optimum
            assert pruned.nodes_explored <= base.nodes_explored


def test_budgeted_results_agree_across_parallelism():
    f = clique(4)
    cfg1 = SearchConfig(node_budget=7, parallelism=1)
    cfg3 = SearchConfig(node_budget=7, parallelism=3)
    r1 = max_berge_free(6, 3, f, cfg1)
    r3 = max_berge_free(6, 3, f, cfg3)
    assert (r1.optimum, r1.exact, r1.nodes_explored) == \
        (r3.optimum, r3.exact, r3.nodes_explored)
    assert r1.witness == r3.witness


def test_max_g_r_matches_full_enumeration_at_n4():
    for k in (3, 4, 5):
        for n in (2, 3, 4):
            assert max_g_r(n, k, 3).optimum == brute.max_g_r_value(n, k, 3)


def test_two_uniform_search_reproduces_graph_turan_numbers():
    # with r = 2 a Berge copy is an ordinary subgraph copy
    for n in (3, 4, 5, 6):
        res = max_berge_free(n, 2, clique(3))
        assert res.exact
        assert res.optimum == len(turan_graph(n, 2).edges)


def test_witnesses_are_free_even_against_brute_force():
    rng = random.Random(89)
    patterns = [clique(4), build_pattern(parse_pattern_name("P2")),
                build_pattern(parse_pattern_name("S3")),
                build_pattern(parse_pattern_name("C4"))]
    for f in patterns:
        for n in (4, 5):
            res = max_berge_free(n, 3, f)
            assert res.exact
            assert contains_berge(res.witness, f) is None
            assert not brute.berge_contains(res.witness, f)
            assert len(res.witness.edges) == res.optimum
    _ = rng


def test_search_never_falls_below_construction_feeders():
    for (n, k) in ((5, 4), (6, 4), (5, 5), (6, 5)):
        f = clique(k)
        turan = turan_hypergraph(n, k - 1, 3)
        res = max_berge_free(n, 3, f)
        assert res.optimum >= len(turan.edges)
    s3 = build_pattern(parse_pattern_name("S3"))
    res = max_berge_free(6, 3, s3)
    seed = construction_seed(6, 3, s3)
    assert res.optimum >= len(seed.edges)
    p3 = build_pattern(parse_pattern_name("P3"))
    res = max_berge_free(6, 3, p3)
    assert res.optimum >= len(partition_construction(6, 3, 3).edges)


def test_search_respects_unconditional_tree_bounds():
    for name, k, delta in (("P2", 2, 2), ("S3", 3, 3), ("P3", 3, 2)):
        t = build_pattern(parse_pattern_name(name))
        for n in (4, 5, 6):
            res = max_berge_free(n, 3, t)
            assert res.exact
            cap = evaluate(BoundSpec("tree-max-degree",
                                     {"k": k, "r": 3, "n": n, "delta": delta}))
            assert res.optimum <= cap.value
            cap = evaluate(BoundSpec("tree-unconditional", {"k": k, "r": 3, "n": n}))
            assert res.optimum <= cap.value


def test_determinism_across_runs_and_parallelism():
    f = clique(4)
    first = max_berge_free(6, 3, f, SearchConfig(parallelism=1))
    again = max_berge_free(6, 3, f, SearchConfig(parallelism=1))
    parallel = max_berge_free(6, 3, f, SearchConfig(parallelism=3))
    assert first == again
    assert first.optimum == parallel.optimum
    assert first.witness == parallel.witness
    assert first.nodes_explored == parallel.nodes_explored


def test_budget_exhaustion_is_inexact_lower_bound():
    res = max_berge_free(6, 3, clique(4), SearchConfig(node_budget=3))
    assert not res.exact
    assert res.optimum <= 8
    assert contains_berge(res.witness, clique(4)) is None


def test_bound_pruned_search_stops_early_but_stays_exact():
    f = clique(4)
    spec = BoundSpec("clique-3uniform", {"k": 4, "n": 6})
    seeded = SearchConfig(seed_witness=turan_hypergraph(6, 3, 3),
                          prune_with_bound=spec)
    res = max_berge_free(6, 3, f, seeded)
    assert (res.optimum, res.exact) == (8, True)
    plain = max_berge_free(6, 3, f)
    assert res.nodes_explored < plain.nodes_explored


def test_bound_pruning_rejects_conditional_and_asymptotic_bounds():
    f = clique(4)
    with pytest.raises(ValueError):
        max_berge_free(5, 3, f, SearchConfig(
            prune_with_bound=BoundSpec("k2t", {"t": 4, "r": 3})))
    with pytest.raises(ValueError):
        max_berge_free(5, 3, f, SearchConfig(
            prune_with_bound=BoundSpec("tree-erdos-sos", {"k": 3, "r": 3, "n": 5})))


def test_search_guards_and_validation():
    with pytest.raises(ValueError):
        max_berge_free(9, 3, clique(4))
    with pytest.raises(ValueError):
        max_berge_free(5, 3, Graph(3))
    with pytest.raises(ValueError):
        max_berge_free(5, 3, clique(4), SearchConfig(node_budget=0))
    with pytest.raises(ValueError):
        max_berge_free(5, 3, clique(4),
                       SearchConfig(seed_witness=Hypergraph(4, 3, [])))
    with pytest.raises(ValueError):
        # seed containing the pattern is a caller bug
        max_berge_free(5, 3, build_pattern(parse_pattern_name("P1")),
                       SearchConfig(seed_witness=Hypergraph(5, 3, [(0, 1, 2)])))


def test_record_witness_can_be_disabled():
    res = max_berge_free(5, 3, clique(4), SearchConfig(record_witness=False))
    assert res.optimum == 5 and res.witness is None
    res = max_g_r(4, 4, 3, SearchConfig(record_witness=False))
    assert res.witness is None


def test_construction_seed_shapes():
    assert len(construction_seed(6, 3, clique(4)).edges) == 8
    s3 = build_pattern(parse_pattern_name("S3"))
    assert len(construction_seed(6, 3, s3).edges) == 4
    c4 = build_pattern(parse_pattern_name("C4"))
    assert construction_seed(6, 3, c4) is None


# ---------------------------------------------------------------------------
# max_g_r
# ---------------------------------------------------------------------------

def test_max_g_r_examples():
    assert max_g_r(5, 4, 3).optimum == 8
    assert max_g_r(3, 3, 3).optimum == 2
    assert max_g_r(4, 5, 3).optimum == 6


def test_max_g_r_matches_turan_maximum_at_small_n():
    for k in (3, 4, 5):
        for n in range(1, 7):
            want = max(len(turan_graph(n, k - 1).edges),
                       count_cliques(turan_graph(n, k - 1), 3))
            res = max_g_r(n, k, 3)
            assert res.exact and res.optimum == want


def test_max_g_r_witness_properties():
    res = max_g_r(5, 4, 3)
    assert not contains_subgraph(res.witness.graph, clique(4))
    assert g_r(res.witness, 3) == res.optimum


def test_max_g_r_guard_and_budget():
    with pytest.raises(ValueError):
        max_g_r(8, 4, 3)
    res = max_g_r(5, 4, 3, SearchConfig(node_budget=5))
    assert not res.exact


# ---------------------------------------------------------------------------
# thresholds
# ---------------------------------------------------------------------------

def test_threshold_k4_r3_is_six():
    report = threshold_n0(4, 3, 6)
    assert report.threshold == 6
    by_n = {row.n: row for row in report.rows}
    assert not by_n[5].turan_optimal and by_n[5].optimum == 5
    assert by_n[5].turan_edges == 4
    assert by_n[6].turan_optimal and by_n[6].optimum == 8


def test_threshold_k6_r3_turan_optimal_everywhere():
    report = threshold_n0(6, 3, 6)
    assert report.threshold == 0
    assert all(row.turan_optimal for row in report.rows)


def test_threshold_k5_r3_is_six():
    # Turan loses at n=5 (9 > 7) and wins again from n=6 in the tested range
    report = threshold_n0(5, 3, 6)
    by_n = {row.n: row for row in report.rows}
    assert by_n[5].turan_edges == 7 and by_n[5].optimum == 9
    assert by_n[6].turan_edges == 12 and by_n[6].turan_optimal
    assert report.threshold == 6 and report.verified_up_to == 6


def test_threshold_k5_r4_fails_at_five():
    report = threshold_n0(5, 4, 5)
    by_n = {row.n: row for row in report.rows}
    assert by_n[5].turan_edges == 2 and by_n[5].optimum == 5
    assert report.threshold is None


def test_threshold_requires_r_below_k():
    with pytest.raises(ValueError):
        threshold_n0(3, 3, 5)


def test_threshold_propagates_budget_failure():
    with pytest.raises(BudgetExhaustedError):
        threshold_n0(4, 3, 6, SearchConfig(node_budget=1))
