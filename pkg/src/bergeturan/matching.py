"""Bipartite matching, Hall certificates, and alternating-path classification.

All routines are deterministic: left vertices are processed in index order
and neighbor lists in ascending index order, so repeated runs (and the
red-blue decomposition built on top of them) are reproducible.

The d-fold Hall condition asks |N(S)| >= d*|S| for every left set S.  It is
decided by a capacitated matching in which each left vertex carries capacity
d instead of materializing d copies; a failed augmentation yields a concrete
violating set S (shrunk greedily toward inclusion-minimality).
"""
from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "BipartiteIncidence",
    "Matching",
    "AlternatingClassification",
    "maximum_matching",
    "hall_violator",
    "classify_alternating",
    "assign_private_sets",
]


@dataclass(frozen=True)
class BipartiteIncidence:
    """Bipartite adjacency from left indices 0..left_size-1 into right indices."""

    left_size: int
    right_size: int
    adj: tuple[tuple[int, ...], ...]

    def __init__(self, left_size: int, right_size: int, adj):
        if left_size < 0 or right_size < 0:
            raise ValueError("class sizes must be >= 0")
        rows = []
        for a in range(left_size):
            row = tuple(sorted(set(adj[a]))) if a < len(adj) else ()
            for b in row:
                if not 0 <= b < right_size:
                    raise ValueError(f"right index {b} out of range")
            rows.append(row)
        object.__setattr__(self, "left_size", left_size)
        object.__setattr__(self, "right_size", right_size)
        object.__setattr__(self, "adj", tuple(rows))


@dataclass(frozen=True)
class Matching:
    """Injective partial map left index -> right index along incidence edges."""

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs):
        pairs = tuple(sorted(pairs))
        lefts = [a for a, _ in pairs]
        rights = [b for _, b in pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("matching must be injective on both sides")
        object.__setattr__(self, "pairs", pairs)

    @property
    def size(self) -> int:
        return len(self.pairs)

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)


@dataclass(frozen=True)
class AlternatingClassification:
    """Partition of both classes induced by alternating reachability from
    the unmatched vertices (A1/B1 unmatched, A2/B2 and A3/B3 the reachable
    matched pairs, A4/B4 the rest)."""

    left_classes: tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]
    right_classes: tuple[frozenset[int], frozenset[int], frozenset[int], frozenset[int]]


def _augment(x: BipartiteIncidence, a: int, match_right: list[int],
             visited: list[bool]) -> bool:
    """Kuhn augmenting step from left vertex a; neighbors in ascending order."""
    for b in x.adj[a]:
        if not visited[b]:
            visited[b] = True
            if match_right[b] == -1 or _augment(x, match_right[b], match_right, visited):
                match_right[b] = a
                return True
    return False


def maximum_matching(x: BipartiteIncidence) -> Matching:
    """Maximum-cardinality matching via augmenting-path search from each left vertex."""
    match_right = [-1] * x.right_size
    for a in range(x.left_size):
        visited = [False] * x.right_size
        _augment(x, a, match_right, visited)
    return Matching([(a, b) for b, a in enumerate(match_right) if a != -1])


def is_maximum(x: BipartiteIncidence, m: Matching) -> bool:
    """True iff no augmenting path exists for m in x."""
    match_left = {a: b for a, b in m.pairs}
    match_right = [-1] * x.right_size
    for a, b in m.pairs:
        if b not in x.adj[a]:
            raise ValueError(f"matched pair ({a}, {b}) is not an incidence edge")
        match_right[b] = a
    for a in range(x.left_size):
        if a not in match_left:
            visited = [False] * x.right_size
            if _augment(x, a, match_right[:], visited):
                return False
    return True


def classify_alternating(x: BipartiteIncidence, m: Matching) -> AlternatingClassification:
    """Alternating-path classification of a maximum matching.

    A2 collects matched left vertices reachable from an unmatched right
    vertex by a path alternating non-matching / matching edges; B3 is the
    mirror image from unmatched left vertices.  Rejects non-maximum
    matchings, which would make the classes meaningless.
    """
    if not is_maximum(x, m):
        raise ValueError("classification requires a maximum matching")
    match_left = m.as_dict()
    match_right = {b: a for a, b in m.pairs}
    a_all = set(range(x.left_size))
    b_all = set(range(x.right_size))
    a1 = a_all - match_left.keys()
    b1 = b_all - match_right.keys()

    # alternating reachability from B1: right -> left along non-matching
    # edges, left -> right along its matched edge
    a2: set[int] = set()
    frontier = list(b1)
    seen_right = set(b1)
    while frontier:
        nxt = []
        for b in frontier:
            for a in range(x.left_size):
                if b in x.adj[a] and match_left.get(a) != b and a not in a2:
                    if a not in match_left:
                        raise AssertionError("augmenting path found in maximum matching")
                    a2.add(a)
                    b2_partner = match_left[a]
                    if b2_partner not in seen_right:
                        seen_right.add(b2_partner)
                        nxt.append(b2_partner)
        frontier = nxt
    b2 = frozenset(match_left[a] for a in a2)

    # mirrored reachability from A1
    b3: set[int] = set()
    frontier_l = list(a1)
    seen_left = set(a1)
    while frontier_l:
        nxt = []
        for a in frontier_l:
            for b in x.adj[a]:
                if match_left.get(a) != b and b not in b3:
                    if b not in match_right:
                        raise AssertionError("augmenting path found in maximum matching")
                    b3.add(b)
                    a3_partner = match_right[b]
                    if a3_partner not in seen_left:
                        seen_left.add(a3_partner)
                        nxt.append(a3_partner)
        frontier_l = nxt
    a3 = frozenset(match_right[b] for b in b3)

    a2f, a1f = frozenset(a2), frozenset(a1)
    b3f, b1f = frozenset(b3), frozenset(b1)
    a4 = frozenset(a_all - a1f - a2f - a3)
    b4 = frozenset(b_all - b1f - b2 - b3f)

    if a2f & a3:
        raise AssertionError("A2 and A3 must be disjoint for a maximum matching")
    for b in b2:
        for a in range(x.left_size):
            if b in x.adj[a] and a not in a2f:
                raise AssertionError("edge from outside A2 into B2")
    return AlternatingClassification((a1f, a2f, a3, a4), (b1f, b2, b3f, b4))


def _capacitated_matching(x: BipartiteIncidence, d: int):
    """Greedy augmenting assignment giving each left vertex up to d rights.

    Returns (match_right, stuck) where match_right[b] is the owning left
    index or -1, and stuck is the first left vertex that could not reach
    capacity d (or None when all did).
    """
    match_right = [-1] * x.right_size
    got = [0] * x.left_size

    def augment(a: int, visited: list[bool]) -> bool:
        for b in x.adj[a]:
            if not visited[b]:
                visited[b] = True
                if match_right[b] == -1:
                    match_right[b] = a
                    return True
                owner = match_right[b]
                if augment(owner, visited):
                    match_right[b] = a
                    return True
        return False

    for a in range(x.left_size):
        while got[a] < d:
            visited = [False] * x.right_size
            if not augment(a, visited):
                return match_right, a
            # rerouting preserves every other owner's unit count
            got[a] += 1
    return match_right, None


def _neighborhood(x: BipartiteIncidence, s) -> set[int]:
    out: set[int] = set()
    for a in s:
        out.update(x.adj[a])
    return out


def _violator_from_failure(x: BipartiteIncidence, stuck: int,
                           match_right: list[int]) -> set[int]:
    """Left vertices alternating-reachable from a failed augmentation root."""
    s = {stuck}
    frontier = [stuck]
    while frontier:
        nxt = []
        for a in frontier:
            for b in x.adj[a]:
                owner = match_right[b]
                if owner != -1 and owner not in s:
                    s.add(owner)
                    nxt.append(owner)
        frontier = nxt
    return s


def hall_violator(x: BipartiteIncidence, d: int) -> frozenset[int] | None:
    """None if |N(S)| >= d*|S| for every left set S, else a violating set.

    The returned set is shrunk greedily, so it is inclusion-minimal in
    practice though minimality is best-effort rather than contractual.
    """
    if d < 1:
        raise ValueError(f"multiplicity must be >= 1, got {d}")
    match_right, stuck = _capacitated_matching(x, d)
    if stuck is None:
        return None
    s = _violator_from_failure(x, stuck, match_right)
    assert len(_neighborhood(x, s)) < d * len(s)
    # greedy shrink toward inclusion-minimality
    changed = True
    while changed:
        changed = False
        for a in sorted(s):
            smaller = s - {a}
            if smaller and len(_neighborhood(x, smaller)) < d * len(smaller):
                s = smaller
                changed = True
                break
    return frozenset(s)


def assign_private_sets(x: BipartiteIncidence, d: int):
    """Pairwise-disjoint d-sets S_a within each left neighborhood, if possible.

    Returns (assignment, None) when the d-fold Hall condition holds, where
    assignment maps every left index to a frozenset of d right indices, and
    (None, violator) otherwise.
    """
    if d < 1:
        raise ValueError(f"multiplicity must be >= 1, got {d}")
    match_right, stuck = _capacitated_matching(x, d)
    if stuck is not None:
        return None, hall_violator(x, d)
    sets: dict[int, set[int]] = {a: set() for a in range(x.left_size)}
    for b, a in enumerate(match_right):
        if a != -1:
            sets[a].add(b)
    assignment = {a: frozenset(s) for a, s in sets.items()}
    for a, s in assignment.items():
        assert len(s) == d and s <= set(x.adj[a])
    return assignment, None
