import itertools
from fractions import Fraction
from math import comb

import pytest

from bergeturan.bounds import (
    ERDOS_SOS_ALL_TREES,
    BoundDomainError,
    BoundSpec,
    BoundValue,
    enumerate_free_graphs,
    evaluate,
    exact_generalized_turan,
    exact_graph_turan,
    parse_bound_spec,
)
from bergeturan.constructions import build_pattern, parse_pattern_name, turan_graph
from bergeturan.core import Graph, contains_subgraph, count_cliques

import brute


def clique(k):
    return Graph(k, itertools.combinations(range(k), 2))


# ---------------------------------------------------------------------------
# evaluate: arms and examples
# ---------------------------------------------------------------------------

def test_gkl_path_arms():
    assert evaluate(BoundSpec("gkl-path", {"k": 6, "r": 3, "n": 60})).value == 200
    # k = r + 1 collapses to n
    assert evaluate(BoundSpec("gkl-path", {"k": 4, "r": 3, "n": 11})).value == 11
    assert evaluate(BoundSpec("gkl-path", {"k": 3, "r": 4, "n": 10})).value == 4
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("gkl-path", {"k": 2, "r": 3, "n": 10}))
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("gkl-path", {"k": 5, "r": 2, "n": 10}))


def test_conditional_tree_bound_carries_flag():
    bv = evaluate(BoundSpec("tree-erdos-sos", {"k": 3, "r": 3, "n": 8}))
    assert bv.value == Fraction(2 * 8, 2)
    assert bv.assumptions == frozenset({ERDOS_SOS_ALL_TREES})
    bv = evaluate(BoundSpec("tree-erdos-sos", {"k": 7, "r": 4, "n": 14}))
    assert bv.value == Fraction(14, 7) * comb(7, 4)
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("tree-erdos-sos", {"k": 5, "r": 2, "n": 10}))


def test_unconditional_arms_never_carry_flags():
    for spec in (
        BoundSpec("gkl-path", {"k": 6, "r": 3, "n": 60}),
        BoundSpec("tree-max-degree", {"k": 3, "r": 3, "n": 7, "delta": 2}),
        BoundSpec("tree-unconditional", {"k": 4, "r": 3, "n": 7}),
        BoundSpec("star", {"k": 3, "r": 3, "n": 7}),
        BoundSpec("clique-max", {"k": 4, "r": 3, "n": 6}),
    ):
        assert evaluate(spec).assumptions == frozenset()


def test_tree_max_degree_arm():
    bv = evaluate(BoundSpec("tree-max-degree", {"k": 3, "r": 3, "n": 10, "delta": 3}))
    assert bv.value == 20
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("tree-max-degree", {"k": 4, "r": 3, "n": 10, "delta": 2}))
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("tree-max-degree", {"k": 3, "r": 3, "n": 10, "delta": 9}))


def test_tree_unconditional_arms():
    # k > r: 2(r-1)/k * C(k,r) * n
    bv = evaluate(BoundSpec("tree-unconditional", {"k": 4, "r": 3, "n": 7}))
    assert bv.value == Fraction(2 * 2, 4) * comb(4, 3) * 7
    # k <= r: (k-1) n
    bv = evaluate(BoundSpec("tree-unconditional", {"k": 3, "r": 3, "n": 7}))
    assert bv.value == 14


def test_star_arms():
    assert evaluate(BoundSpec("star", {"k": 2, "r": 3, "n": 7})).value == 7 // 3
    assert evaluate(BoundSpec("star", {"k": 3, "r": 3, "n": 7})).value == 14 // 3
    assert evaluate(BoundSpec("star", {"k": 6, "r": 3, "n": 12})).value == \
        Fraction(12, 6) * comb(6, 3)


def test_k2t_is_asymptotic_with_exact_coefficient():
    bv = evaluate(BoundSpec("k2t", {"t": 4, "r": 3}))
    assert bv.asymptotic and bv.n_exponent == Fraction(3, 2)
    assert bv.value == Fraction(comb(4, 2), 3 * 4) and bv.radicand == 3
    # sqrt(3)*1/2 * n^{3/2} equals the (t-1)^{3/2}/6 form at t=4
    assert bv.value == Fraction(1, 2)
    bv = evaluate(BoundSpec("k2t", {"t": 3, "r": 3}))
    assert bv.value == Fraction(1, 2) and bv.radicand == 2
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("k2t", {"t": 1, "r": 3}))


def test_c2k_coefficient():
    assert evaluate(BoundSpec("c2k", {"k": 3, "r": 3}, ex_input=1)).value == 1
    assert evaluate(BoundSpec("c2k", {"k": 5, "r": 3}, ex_input=6)).value == 14
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("c2k", {"k": 5, "r": 4}, ex_input=6))
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("c2k", {"k": 5, "r": 3}))


def test_theta_arms():
    # (k-1)t > r
    bv = evaluate(BoundSpec("theta", {"k": 3, "t": 3, "r": 3}, ex_input=1))
    assert bv.value == Fraction(2, 6) * comb(5, 1)
    # (k-1)t = r
    bv = evaluate(BoundSpec("theta", {"k": 2, "t": 3, "r": 3}, ex_input=1))
    assert bv.value == Fraction(2, 3)
    # (k-1)t < r
    bv = evaluate(BoundSpec("theta", {"k": 2, "t": 2, "r": 5}, ex_input=10))
    assert bv.value == Fraction(2 * 1, 5) * 10


def test_forest_deletion_arms():
    bv = evaluate(BoundSpec("forest-deletion", {"k": 6, "r": 4}, ex_input=1))
    assert bv.value == Fraction(4 * 2, 3 * 4) * comb(3, 2)
    bv = evaluate(BoundSpec("forest-deletion", {"k": 7, "r": 6}, ex_input=3))
    assert bv.value == Fraction(2 * 4, 6) * 3
    bv = evaluate(BoundSpec("forest-deletion", {"k": 5, "r": 6}, ex_input=3))
    assert bv.value == 3


def test_clique_max_example():
    bv = evaluate(BoundSpec("clique-max", {"k": 4, "r": 3, "n": 6}))
    assert bv.value == 12
    tg = turan_graph(6, 3)
    assert max(len(tg.edges), count_cliques(tg, 3)) == 12


def test_sandwich_sides():
    upper = evaluate(BoundSpec("sandwich", {"r": 3, "n": 5},
                               ex_input={"ex_kr_f": 4, "ex_f": 8}))
    assert upper.value == 12 and upper.direction == "upper"
    lower = evaluate(BoundSpec("sandwich", {"r": 3, "n": 5, "lower": 1},
                               ex_input={"ex_kr_f": 4}))
    assert lower.value == 4 and lower.direction == "lower"
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("sandwich", {"r": 3, "n": 5}, ex_input={"ex_kr_f": 4}))


def test_three_uniform_clique_table():
    assert evaluate(BoundSpec("clique-3uniform", {"k": 4, "n": 5})).value == 5
    assert evaluate(BoundSpec("clique-3uniform", {"k": 5, "n": 5})).value == 9
    for n in range(1, 5):
        assert evaluate(BoundSpec("clique-3uniform", {"k": 4, "n": n})).value == comb(n, 3)
        assert evaluate(BoundSpec("clique-3uniform", {"k": 5, "n": n})).value == comb(n, 3)
    assert evaluate(BoundSpec("clique-3uniform", {"k": 4, "n": 6})).value == 8
    assert evaluate(BoundSpec("clique-3uniform", {"k": 6, "n": 6})).value == 16
    assert evaluate(BoundSpec("clique-3uniform", {"k": 4, "n": 5})).direction == "exact"
    with pytest.raises(BoundDomainError):
        evaluate(BoundSpec("clique-3uniform", {"k": 3, "n": 5}))


def test_evaluate_is_pure():
    spec = BoundSpec("clique-max", {"k": 4, "r": 3, "n": 6})
    assert evaluate(spec) == evaluate(spec)


def test_bound_value_validation_and_json():
    with pytest.raises(ValueError):
        BoundValue(Fraction(-1), "upper", "x")
    with pytest.raises(ValueError):
        BoundValue(Fraction(1), "sideways", "x")
    bv = evaluate(BoundSpec("gkl-path", {"k": 6, "r": 3, "n": 60}))
    assert bv.to_json_dict()["value"] == "200"
    bv = evaluate(BoundSpec("k2t", {"t": 4, "r": 3}))
    data = bv.to_json_dict()
    assert data["asymptotic"] and data["nExponent"] == "3/2" and data["radicand"] == 3


def test_parse_bound_spec_roundtrip():
    spec = parse_bound_spec({"theorem": "gkl-path",
                             "params": {"k": 6, "r": 3, "n": 60}})
    assert evaluate(spec).value == 200
    spec = parse_bound_spec({"theorem": "c2k", "params": {"k": 4, "r": 3},
                             "exInput": "7/2"})
    assert evaluate(spec).value == Fraction(5, 3) * Fraction(7, 2)
    with pytest.raises(BoundDomainError):
        parse_bound_spec({"theorem": "mystery", "params": {}})


# ---------------------------------------------------------------------------
# exhaustive Turan oracles
# ---------------------------------------------------------------------------

def test_exact_graph_turan_examples():
    assert exact_graph_turan(5, clique(3)) == 6
    p2 = build_pattern(parse_pattern_name("P2"))
    assert exact_graph_turan(4, p2) == 2
    assert exact_graph_turan(3, Graph(2, [(0, 1)])) == 0


def test_exact_graph_turan_matches_turan_theorem():
    for n in range(2, 8):
        for k in (3, 4, 5):
            assert exact_graph_turan(n, clique(k)) == len(turan_graph(n, k - 1).edges)


@pytest.mark.slow
def test_exact_generalized_turan_matches_clique_counts_up_to_eight():
    for k in (3, 4, 5):
        for n in range(1, 9):
            for r in range(2, k):
                got = exact_generalized_turan(n, clique(r), clique(k))
                assert got == count_cliques(turan_graph(n, k - 1), r), (n, k, r)


def test_exact_generalized_turan_examples():
    assert exact_generalized_turan(5, clique(3), clique(4)) == 4
    assert exact_generalized_turan(4, Graph(2, [(0, 1)]), clique(3)) == 4
    assert exact_generalized_turan(3, clique(3), clique(3)) == 0


def test_search_limit_guard():
    with pytest.raises(ValueError):
        exact_graph_turan(10, clique(3))
    with pytest.raises(ValueError):
        exact_generalized_turan(10, clique(2), clique(3), limit=9)


def test_enumerated_representatives_are_free_and_distinct():
    k4 = clique(4)
    reps = enumerate_free_graphs(5, k4)
    assert all(not contains_subgraph(g, k4) for g in reps)
    from bergeturan.core import canonical_form
    keys = [canonical_form(g).key for g in reps]
    assert len(keys) == len(set(keys))
    # every K4-free class on 5 vertices appears: compare against brute count
    pairs = list(itertools.combinations(range(5), 2))
    seen = set()
    for mask in range(2 ** len(pairs)):
        g = Graph(5, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if not brute.has_subgraph(g, k4):
            seen.add(canonical_form(g).key)
    assert set(keys) == seen


def test_sandwich_holds_numerically_where_search_results_exist():
    from bergeturan.search import SearchConfig, max_berge_free

    for (n, name) in ((5, "K4"), (5, "C4"), (6, "P3")):
        f = build_pattern(parse_pattern_name(name))
        k3 = clique(3)
        lower = exact_generalized_turan(n, k3, f)
        upper = lower + exact_graph_turan(n, f)
        mid = max_berge_free(n, 3, f, SearchConfig()).optimum
        assert lower <= mid <= upper
