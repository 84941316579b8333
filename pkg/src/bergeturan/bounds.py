"""Closed-form bounds on Berge-Turan numbers, in exact rational arithmetic.

Every bound below caps ex_r(n, Berge-F), the maximum hyperedge count of an
n-vertex r-uniform Berge-F-free hypergraph, for its stated family F.
Values are fractions.Fraction; nothing here ever rounds.

Theorem arms (theorem id, family, value):
  gkl-path          P_k:  n/k * C(k,r) for k > r+1 > 3; n for k = r+1 > 2;
                          n(k-1)/(r+1) for r >= k > 2.
  tree-erdos-sos    trees on k+1 vertices, conditional on the Erdos-Sos
                    conjecture for all trees: n/k * C(k,r) for k > r+1 > 3;
                    (k-1)n/2 for k <= r+1.
  tree-max-degree   trees with maximum degree D, k <= r: (D-1)n.
  tree-unconditional trees: 2(r-1)/k * C(k,r) * n for k > r; (k-1)n for k <= r.
  star              S_k: n/k * C(k,r) for k > r+1; floor(n(k-1)/r) for k <= r+1.
  k2t               K_{2,t}: leading coefficient of an n^{3/2} bound,
                    sqrt(t-1) * C(t,r-1)/(rt) for t >= r+1, sqrt(t-1)/2 for
                    t <= r; asymptotic (the o(1) term is out of scope), so
                    the value is (rational part, radicand, exponent 3/2).
  c2k               C_{2k}, r = 3, k >= 3: (2k-3)/3 * ex(n, C_{2k}).
  theta             Theta_{k,t} with m = (k-1)t:
                    2/(r(r-1)) * C(m-1, r-2) * ex for m > r;
                    (m-1)/m * ex for m = r; 2(t-1)/r * ex for m < r.
  forest-deletion   F on k vertices, some vertex deletion leaves a forest:
                    4(r-2)/((r-1)r) * C(k-3, r-2) * ex for k > r+1;
                    2(k-3)/r * ex for r/2 + 3 < k <= r+1; ex for k <= r/2+3.
  clique-max        K_k: max{ ex(n,K_k), ex(n,K_r,K_k) }, both terms exact
                    via the Turan graph T_2(n,k-1) and clique counting.
  sandwich          any F: lower ex(n,K_r,F), upper ex(n,K_r,F) + ex(n,F);
                    both supplied as exact inputs.
  clique-3uniform   exact ex_3(n, Berge-K_k) for k >= 4: |T_3(n,k-1)| when
                    k >= 6 or n >= 6; C(n,3) when n <= 4; 5 at (k,n)=(4,5);
                    9 at (k,n)=(5,5).

Parameters outside every arm's hypothesis raise BoundDomainError, never
extrapolate.  The only conditional arm is tree-erdos-sos, flagged with
ERDOS_SOS_ALL_TREES.

`exact_graph_turan` and `exact_generalized_turan` compute ex(n,F) and
ex(n,H,F) by exhaustive isomorph-free search: grow F-free graphs edge by
edge, deduplicating each level by canonical form (edge deletion preserves
F-freeness, so every class is reached).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .core import (
    Graph,
    canonical_form,
    count_cliques,
    count_subgraphs,
    _embeddings,
)
from .constructions import turan_graph, turan_hypergraph

__all__ = [
    "ERDOS_SOS_ALL_TREES",
    "BoundSpec",
    "BoundValue",
    "BoundDomainError",
    "evaluate",
    "parse_bound_spec",
    "exact_graph_turan",
    "exact_generalized_turan",
    "enumerate_free_graphs",
]

ERDOS_SOS_ALL_TREES = "erdos-sos-for-all-trees"

UPPER = "upper"
LOWER = "lower"
EXACT = "exact"

THEOREMS = (
    "gkl-path",
    "tree-erdos-sos",
    "tree-max-degree",
    "tree-unconditional",
    "star",
    "k2t",
    "c2k",
    "theta",
    "forest-deletion",
    "clique-max",
    "sandwich",
    "clique-3uniform",
)


class BoundDomainError(ValueError):
    """Parameters fall outside every arm of the requested theorem."""


@dataclass(frozen=True)
class BoundSpec:
    """A theorem arm request: id, integer parameters, optional exact inputs.

    Theorems whose statement consumes a graph Turan number take it through
    `ex_input`; the sandwich takes a mapping with keys ex_kr_f and ex_f.
    """

    theorem: str
    params: tuple[tuple[str, int], ...]
    ex_input: object = None

    def __init__(self, theorem: str, params: dict | None = None, ex_input=None):
        if theorem not in THEOREMS:
            raise BoundDomainError(f"unknown theorem id {theorem!r}")
        items = tuple(sorted((str(k), int(v)) for k, v in (params or {}).items()))
        if isinstance(ex_input, dict):
            ex_input = tuple(sorted((str(k), Fraction(v)) for k, v in ex_input.items()))
        elif ex_input is not None:
            ex_input = Fraction(ex_input)
        object.__setattr__(self, "theorem", theorem)
        object.__setattr__(self, "params", items)
        object.__setattr__(self, "ex_input", ex_input)

    def param(self, name: str) -> int:
        for k, v in self.params:
            if k == name:
                return v
        raise BoundDomainError(f"theorem {self.theorem!r} needs parameter {name!r}")

    def get(self, name: str, default: int | None = None) -> int | None:
        for k, v in self.params:
            if k == name:
                return v
        return default


@dataclass(frozen=True)
class BoundValue:
    """An exact bound with truthfully propagated assumptions.

    Finite bounds carry the full value.  Asymptotic bounds (n_exponent set)
    carry only the leading coefficient, split as value * sqrt(radicand) to
    stay exact, and must not be compared against finite search results
    except as explicitly non-binding reporting.
    """

    value: Fraction
    direction: str
    applies_to: str
    assumptions: frozenset[str] = frozenset()
    radicand: int = 1
    n_exponent: Fraction | None = None

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("bound values are nonnegative")
        if self.direction not in (UPPER, LOWER, EXACT):
            raise ValueError(f"unknown direction {self.direction!r}")

    @property
    def asymptotic(self) -> bool:
        return self.n_exponent is not None

    def to_json_dict(self) -> dict:
        out = {
            "value": _frac_str(self.value),
            "direction": self.direction,
            "appliesTo": self.applies_to,
            "assumptions": sorted(self.assumptions),
            "asymptotic": self.asymptotic,
        }
        if self.asymptotic:
            out["radicand"] = self.radicand
            out["nExponent"] = _frac_str(self.n_exponent)
        return out


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_bound_spec(data: dict) -> BoundSpec:
    """BoundSpec from a JSON object {theorem, params, exInput?}."""
    ex = data.get("exInput")
    if isinstance(ex, str):
        ex = Fraction(ex)
    return BoundSpec(data["theorem"], data.get("params") or {}, ex)


def _single_ex_input(spec: BoundSpec) -> Fraction:
    if spec.ex_input is None or isinstance(spec.ex_input, tuple):
        raise BoundDomainError(
            f"theorem {spec.theorem!r} needs a single exact ex(n, F) input")
    return spec.ex_input


def evaluate(spec: BoundSpec) -> BoundValue:
    """Evaluate one theorem arm; pure in its spec."""
    t = spec.theorem
    if t == "gkl-path":
        k, r, n = spec.param("k"), spec.param("r"), spec.param("n")
        if k > r + 1 > 3:
            value = Fraction(n, k) * comb(k, r)
        elif k == r + 1 and k > 2:
            value = Fraction(n, k) * comb(k, r)
        elif r >= k > 2:
            value = Fraction(n * (k - 1), r + 1)
        else:
            raise BoundDomainError(f"no path arm covers k={k}, r={r}")
        return BoundValue(value, UPPER, f"ex_{r}({n}, Berge-P_{k})")

    if t == "tree-erdos-sos":
        k, r, n = spec.param("k"), spec.param("r"), spec.param("n")
        flags = frozenset({ERDOS_SOS_ALL_TREES})
        if k > r + 1 > 3:
            value = Fraction(n, k) * comb(k, r)
        elif 1 <= k <= r + 1 and r >= 2:
            value = Fraction((k - 1) * n, 2)
        else:
            raise BoundDomainError(f"no conditional tree arm covers k={k}, r={r}")
        return BoundValue(value, UPPER,
                          f"ex_{r}({n}, Berge-T) for trees T on {k + 1} vertices",
                          assumptions=flags)

    if t == "tree-max-degree":
        k, r, n = spec.param("k"), spec.param("r"), spec.param("n")
        delta = spec.param("delta")
        if not 1 <= delta <= k:
            raise BoundDomainError(f"maximum degree {delta} impossible for k={k}")
        if k > r:
            raise BoundDomainError(f"arm requires k <= r, got k={k}, r={r}")
        return BoundValue(
            Fraction((delta - 1) * n), UPPER,
            f"ex_{r}({n}, Berge-T) for trees T on {k + 1} vertices, maxdeg {delta}")

    if t == "tree-unconditional":
        k, r, n = spec.param("k"), spec.param("r"), spec.param("n")
        if k < 1 or r < 2:
            raise BoundDomainError(f"need k >= 1 and r >= 2, got k={k}, r={r}")
        if k > r:
            value = Fraction(2 * (r - 1), k) * comb(k, r) * n
        else:
            value = Fraction((k - 1) * n)
        return BoundValue(value, UPPER,
                          f"ex_{r}({n}, Berge-T) for trees T on {k + 1} vertices")

    if t == "star":
        k, r, n = spec.param("k"), spec.param("r"), spec.param("n")
        if k < 1 or r < 2:
            raise BoundDomainError(f"need k >= 1 and r >= 2, got k={k}, r={r}")
        if k > r + 1:
            value = Fraction(n, k) * comb(k, r)
        else:
            value = Fraction(n * (k - 1) // r)
        return BoundValue(value, UPPER, f"ex_{r}({n}, Berge-S_{k})")

    if t == "k2t":
        tt, r = spec.param("t"), spec.param("r")
        if tt < 2 or r < 2:
            raise BoundDomainError(f"need t >= 2 and r >= 2, got t={tt}, r={r}")
        if tt >= r + 1:
            coeff = Fraction(comb(tt, r - 1), r * tt)
        else:
            coeff = Fraction(1, 2)
        return BoundValue(coeff, UPPER,
                          f"ex_{r}(n, Berge-K_2,{tt}) leading n^(3/2) coefficient",
                          radicand=tt - 1, n_exponent=Fraction(3, 2))

    if t == "c2k":
        k, r = spec.param("k"), spec.param("r")
        if r != 3 or k < 3:
            raise BoundDomainError(f"arm requires r=3 and k >= 3, got k={k}, r={r}")
        ex = _single_ex_input(spec)
        return BoundValue(Fraction(2 * k - 3, 3) * ex, UPPER,
                          f"ex_3(n, Berge-C_{2 * k}) given ex(n, C_{2 * k})")

    if t == "theta":
        k, tt, r = spec.param("k"), spec.param("t"), spec.param("r")
        if k < 2 or tt < 2 or r < 2:
            raise BoundDomainError(f"need k,t >= 2 and r >= 2, got k={k}, t={tt}, r={r}")
        m = (k - 1) * tt
        ex = _single_ex_input(spec)
        if m > r:
            coeff = Fraction(2, r * (r - 1)) * comb(m - 1, r - 2)
        elif m == r:
            coeff = Fraction(m - 1, m)
        else:
            coeff = Fraction(2 * (tt - 1), r)
        return BoundValue(coeff * ex, UPPER,
                          f"ex_{r}(n, Berge-Theta_{k},{tt}) given ex(n, Theta)")

    if t == "forest-deletion":
        k, r = spec.param("k"), spec.param("r")
        if k < 3 or r < 3:
            raise BoundDomainError(f"need k >= 3 and r >= 3, got k={k}, r={r}")
        ex = _single_ex_input(spec)
        if k > r + 1:
            coeff = Fraction(4 * (r - 2), (r - 1) * r) * comb(k - 3, r - 2)
        elif 2 * k > r + 6:
            coeff = Fraction(2 * (k - 3), r)
        else:
            coeff = Fraction(1)
        return BoundValue(coeff * ex, UPPER,
                          f"ex_{r}(n, Berge-F) for F on {k} vertices with a "
                          "vertex whose deletion leaves a forest")

    if t == "clique-max":
        k, r, n = spec.param("k"), spec.param("r"), spec.param("n")
        if k < 2 or r < 2:
            raise BoundDomainError(f"need k >= 2 and r >= 2, got k={k}, r={r}")
        tg = turan_graph(n, k - 1)
        value = Fraction(max(len(tg.edges), count_cliques(tg, r)))
        return BoundValue(value, UPPER, f"ex_{r}({n}, Berge-K_{k})")

    if t == "sandwich":
        r, n = spec.param("r"), spec.param("n")
        side = spec.get("lower", 0)
        inputs = dict(spec.ex_input) if isinstance(spec.ex_input, tuple) else None
        if not inputs or "ex_kr_f" not in inputs:
            raise BoundDomainError(
                "sandwich needs exInput {ex_kr_f, ex_f} (ex_f for the upper side)")
        if side:
            return BoundValue(inputs["ex_kr_f"], LOWER, f"ex_{r}({n}, Berge-F)")
        if "ex_f" not in inputs:
            raise BoundDomainError("sandwich upper side needs ex_f")
        return BoundValue(inputs["ex_kr_f"] + inputs["ex_f"], UPPER,
                          f"ex_{r}({n}, Berge-F)")

    if t == "clique-3uniform":
        k, n = spec.param("k"), spec.param("n")
        if k < 4 or n < 1:
            raise BoundDomainError(f"table covers k >= 4 and n >= 1, got k={k}, n={n}")
        if k >= 6 or n >= 6:
            value = Fraction(len(turan_hypergraph(n, k - 1, 3).edges))
        elif n <= 4:
            value = Fraction(comb(n, 3))
        elif k == 4:
            value = Fraction(5)
        else:
            value = Fraction(9)
        return BoundValue(value, EXACT, f"ex_3({n}, Berge-K_{k})")

    raise BoundDomainError(f"unknown theorem id {t!r}")


# ---------------------------------------------------------------------------
# Exhaustive graph Turan oracles
# ---------------------------------------------------------------------------

DEFAULT_SEARCH_LIMIT = 9

_free_graph_cache: dict[tuple[int, bytes], tuple[Graph, ...]] = {}


def _creates_pattern(g: Graph, f: Graph, new_edge: tuple[int, int]) -> bool:
    """Does adding new_edge to an f-free graph g complete a copy of f?

    Any fresh copy maps some pattern edge onto the new pair, so seeding
    both orientations of every pattern edge is exhaustive.
    """
    u, v = new_edge
    g2 = g.add_edge(u, v)
    tried = set()
    for (a, b) in f.edges:
        for seed in ((a, u, b, v), (a, v, b, u)):
            key = seed
            if key in tried:
                continue
            tried.add(key)
            if next(_embeddings(g2, f, {seed[0]: seed[1], seed[2]: seed[3]}), None):
                return True
    return False


def enumerate_free_graphs(n: int, f: Graph) -> tuple[Graph, ...]:
    """One representative per isomorphism class of f-free graphs on n vertices.

    Level-by-level growth with canonical-form deduplication; results cached
    per (n, canonical form of f).
    """
    key = (n, canonical_form(f).key)
    cached = _free_graph_cache.get(key)
    if cached is not None:
        return cached
    if not f.edges and f.n <= n:
        # every graph on n >= |V(f)| vertices contains the edgeless pattern
        reps: tuple[Graph, ...] = ()
        _free_graph_cache[key] = reps
        return reps
    start = Graph(n)
    level = {canonical_form(start).key: start}
    collected = [start]
    while level:
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for u in range(n):
                for v in range(u + 1, n):
                    if not g.has_edge(u, v) and not _creates_pattern(g, f, (u, v)):
                        g2 = g.add_edge(u, v)
                        k2 = canonical_form(g2).key
                        if k2 not in nxt:
                            nxt[k2] = g2
        level = nxt
        collected.extend(level.values())
    reps = tuple(collected)
    _free_graph_cache[key] = reps
    return reps


def _check_limit(n: int, limit: int) -> None:
    if n > limit:
        raise ValueError(f"exhaustive search limited to n <= {limit}, got n={n}")
    if n < 0:
        raise ValueError("vertex count must be >= 0")


def exact_graph_turan(n: int, f: Graph, limit: int = DEFAULT_SEARCH_LIMIT) -> int:
    """ex(n, f): maximum edges of an n-vertex f-free graph, by exhaustion."""
    _check_limit(n, limit)
    reps = enumerate_free_graphs(n, f)
    if not reps:
        raise ValueError("no f-free graph exists (pattern has no edges)")
    return max(len(g.edges) for g in reps)


def exact_generalized_turan(n: int, h: Graph, f: Graph,
                            limit: int = DEFAULT_SEARCH_LIMIT) -> int:
    """ex(n, h, f): maximum unlabeled copies of h in an n-vertex f-free graph."""
    _check_limit(n, limit)
    reps = enumerate_free_graphs(n, f)
    if not reps:
        raise ValueError("no f-free graph exists (pattern has no edges)")
    if h.is_complete():
        return max(count_cliques(g, h.n) for g in reps)
    return max(count_subgraphs(g, h) for g in reps)
