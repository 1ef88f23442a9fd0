"""Exact property checks: triangles, maximality, independence, covering levels.

The two covering properties share one witness format.  A weighting w >= 0
with total 3m refutes level m of the plain covering property when no vertex
sees weight m+1 in its neighbourhood, and refutes the independent-certificate
variant when additionally no independent subset of the support reaches weight
m+2, nor weight m+1 inside a single neighbourhood.  Searches canonicalize
multisets as weight vectors and walk vertices in a fixed order, so results
are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .graph import Graph, TwinPartition, _bits, quotient, twin_partition


@dataclass(frozen=True)
class WeightVector:
    """Per-vertex nonnegative integer multiplicities of a vertex multiset."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    @property
    def total(self) -> int:
        return sum(self.weights)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(v for v, w in enumerate(self.weights) if w > 0)


@dataclass(frozen=True)
class DVerdict:
    holds: bool
    level: int
    witness: Optional[WeightVector]


@dataclass(frozen=True)
class QVerdict:
    holds: bool
    level: int
    witness: Optional[WeightVector]


@dataclass(frozen=True)
class MaximalityResult:
    holds: bool
    triangle: Optional[tuple[int, int, int]]
    missing_pair: Optional[tuple[int, int]]


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int
    max_degree: int


def is_triangle_free(g: Graph) -> tuple[bool, Optional[tuple[int, int, int]]]:
    """True plus None, or False plus the lexicographically least triangle."""
    for u in range(g.n):
        row = g.adj[u] >> (u + 1) << (u + 1)
        for v in _bits(row):
            common = g.adj[v] & row
            common >>= v + 1
            if common:
                w = (v + 1) + ((common & -common).bit_length() - 1)
                return False, (u, v, w)
    return True, None


def is_maximal_triangle_free(g: Graph) -> MaximalityResult:
    """Triangle-free and every non-adjacent pair has a common neighbour."""
    free, tri = is_triangle_free(g)
    if not free:
        return MaximalityResult(False, tri, None)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not (g.adj[u] & g.adj[v]):
                return MaximalityResult(False, None, (u, v))
    return MaximalityResult(True, None, None)


def degree_profile(g: Graph) -> DegreeProfile:
    degs = tuple(sorted(g.adj[v].bit_count() for v in range(g.n)))
    return DegreeProfile(degs, degs[0], degs[-1])


def weighted_coverage(g: Graph, weights: tuple[int, ...]) -> tuple[int, ...]:
    """For each vertex, the total weight sitting on its neighbourhood."""
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    return tuple(sum(weights[v] for v in _bits(g.adj[y])) for y in range(g.n))


# -- maximum-weight independent sets ------------------------------------


def _cover_bound(adj: tuple[int, ...], weights, mask: int) -> int:
    """Upper bound: greedy clique cover, best weight per clique."""
    cliques: list[list[int]] = []  # [clique_mask, max_weight]
    for v in _bits(mask):
        for entry in cliques:
            if adj[v] & entry[0] == entry[0]:
                entry[0] |= 1 << v
                if weights[v] > entry[1]:
                    entry[1] = weights[v]
                break
        else:
            cliques.append([1 << v, weights[v]])
    return sum(entry[1] for entry in cliques)


def max_weight_independent_set(
    g: Graph, weights: tuple[int, ...], within: Optional[int] = None
) -> tuple[int, int]:
    """Exact branch and bound; returns (best total weight, vertex mask).

    ``within`` restricts the ground set to a vertex bitmask.  Zero-weight
    vertices never enter the returned set.
    """
    if len(weights) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(weights)}")
    mask = (1 << g.n) - 1 if within is None else within
    for v in _bits(mask):
        if weights[v] == 0:
            mask &= ~(1 << v)
    adj = g.adj
    best = 0
    best_mask = 0

    def go(mask: int, acc: int, acc_mask: int) -> None:
        nonlocal best, best_mask
        # take vertices with no remaining neighbours outright
        changed = True
        while changed:
            changed = False
            for v in _bits(mask):
                if not adj[v] & mask:
                    acc += weights[v]
                    acc_mask |= 1 << v
                    mask &= ~(1 << v)
                    changed = True
        if acc > best:
            best, best_mask = acc, acc_mask
        if not mask or acc + _cover_bound(adj, weights, mask) <= best:
            return
        pivot = max(_bits(mask), key=lambda v: (adj[v] & mask).bit_count())
        go(mask & ~(adj[pivot] | (1 << pivot)), acc + weights[pivot], acc_mask | (1 << pivot))
        go(mask & ~(1 << pivot), acc, acc_mask)

    go(mask, 0, 0)
    return best, best_mask


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with one maximum independent set."""
    value, mask = max_weight_independent_set(g, (1,) * g.n)
    return value, tuple(_bits(mask))


# -- witness searches ----------------------------------------------------


def _coverage_search(
    g: Graph, m: int, leaf_ok, isolated_cap: Optional[int] = None
) -> Optional[tuple[int, ...]]:
    """DFS over weightings with total 3m keeping every coverage <= m.

    Vertices are visited by descending degree; weights ascend from zero.
    ``leaf_ok`` filters complete assignments (used for the certificate
    variant); the first accepted leaf is returned.  Vertices without
    neighbours are unconstrained by coverage, so they carry the full total
    unless ``isolated_cap`` lowers that.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    target = 3 * m
    free = target if isolated_cap is None else min(isolated_cap, target)
    caps = [m if g.adj[v] else free for v in range(n)]
    deg = [g.degree(v) for v in range(n)]
    nbrs = [tuple(_bits(g.adj[v])) for v in range(n)]
    room = [m] * n  # remaining coverage budget per vertex
    weights = [0] * n

    def dfs(idx: int, placed: int, budget: int) -> bool:
        # budget = sum of all coverage headrooms; a unit on v consumes deg(v)
        if placed == target:
            return leaf_ok(weights)
        if idx == n:
            return False
        # fractional-knapsack capacity of the tail, cheapest degrees first
        # (order[] is degree-descending, so walk it backwards)
        need = target - placed
        mass = 0
        left = budget
        for j in range(n - 1, idx - 1, -1):
            v = order[j]
            d = deg[v]
            if d > left:
                break
            head = caps[v]
            for y in nbrs[v]:
                r = room[y]
                if r < head:
                    head = r
            if head:
                take = head if d == 0 or head * d <= left else left // d
                mass += take
                if mass >= need:
                    break
                left -= take * d
        if mass < need:
            return False
        u = order[idx]
        un = nbrs[u]
        top = caps[u]
        for y in un:
            r = room[y]
            if r < top:
                top = r
        if top > need:
            top = need
        du = deg[u]
        for val in range(top + 1):
            if val:
                weights[u] = val
                for y in un:
                    room[y] -= 1
            if dfs(idx + 1, placed + val, budget - val * du):
                return True
        if top > 0:
            for y in un:
                room[y] += top
        weights[u] = 0
        return False

    return tuple(weights) if dfs(0, 0, n * m) else None


def _certificate_free(g: Graph, m: int, weights) -> bool:
    """No independent support subset of weight m+2, none of weight m+1 in a
    common neighbourhood."""
    w = tuple(weights)
    top, _ = max_weight_independent_set(g, w)
    if top > m + 1:
        return False
    for y in range(g.n):
        if g.adj[y]:
            near, _ = max_weight_independent_set(g, w, within=g.adj[y])
            if near > m:
                return False
    return True


def _q_search_general(g: Graph, m: int) -> Optional[tuple[int, ...]]:
    """Certificate-variant witness search without the coverage pruning,
    which is only sound on triangle-free graphs."""
    n = g.n
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    target = 3 * m
    caps = [min(m if g.adj[v] else m + 1, target) for v in range(n)]
    suffix = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = suffix[j + 1] + caps[order[j]]
    weights = [0] * n

    def dfs(idx: int, placed: int) -> bool:
        if placed == target:
            return _certificate_free(g, m, weights)
        if idx == n or placed + suffix[idx] < target:
            return False
        u = order[idx]
        for val in range(min(caps[u], target - placed) + 1):
            weights[u] = val
            if dfs(idx + 1, placed + val):
                return True
        weights[u] = 0
        return False

    return tuple(weights) if dfs(0, 0) else None


def _on_quotient(g: Graph, run):
    """Run a witness search on the twin quotient and lift any witness back."""
    partition = twin_partition(g)
    if len(partition.classes) == g.n:
        return run(g)
    verdict = run(quotient(g, partition))
    if verdict.holds or verdict.witness is None:
        return verdict
    lifted = [0] * g.n
    for cls_index, rep in enumerate(partition.representatives):
        lifted[rep] = verdict.witness.weights[cls_index]
    return type(verdict)(False, verdict.level, WeightVector(tuple(lifted)))


def check_d(g: Graph, k: int, direct: bool = False) -> DVerdict:
    """Decide the plain covering property up to level k.

    For each m = 1..k every weighting of total 3m must put weight at least
    m+1 on some closed neighbourhood; the first refuting weighting (in
    search order) is returned as the witness.  Runs on the twin quotient
    unless ``direct`` is set; levels are checked in increasing order.
    """
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    if not direct:
        return _on_quotient(g, lambda h: check_d(h, k, direct=True))
    for m in range(1, k + 1):
        witness = _coverage_search(g, m, lambda _: True)
        if witness is not None:
            return DVerdict(False, m, WeightVector(witness))
    return DVerdict(True, k, None)


def check_q(g: Graph, k: int, direct: bool = False) -> QVerdict:
    """Decide the independent-certificate covering property up to level k.

    A witness weighting admits no independent support subset of weight m+2
    and none of weight m+1 with a common neighbour.  On triangle-free
    inputs the search reuses the coverage pruning (neighbourhoods are
    independent there); otherwise a capped direct enumeration runs.
    """
    if k < 1:
        raise ValueError(f"level must be >= 1, got {k}")
    if not direct:
        return _on_quotient(g, lambda h: check_q(h, k, direct=True))
    free, _ = is_triangle_free(g)
    for m in range(1, k + 1):
        if free:
            witness = _coverage_search(
                g, m, lambda w: _certificate_free(g, m, w), isolated_cap=m + 1
            )
        else:
            witness = _q_search_general(g, m)
        if witness is not None:
            return QVerdict(False, m, WeightVector(witness))
    return QVerdict(True, k, None)


def validate_d_witness(g: Graph, m: int, weights: tuple[int, ...]) -> bool:
    """Re-check a level-m refutation of the plain covering property."""
    if len(weights) != g.n or any(w < 0 for w in weights) or sum(weights) != 3 * m:
        return False
    return max(weighted_coverage(g, weights)) <= m


def validate_q_witness(g: Graph, m: int, weights: tuple[int, ...]) -> bool:
    """Re-check a level-m refutation of the certificate variant."""
    if len(weights) != g.n or any(w < 0 for w in weights) or sum(weights) != 3 * m:
        return False
    return _certificate_free(g, m, weights)


def in_class_d4(g: Graph) -> bool:
    """Maximal triangle-free and satisfying the covering property at level 4."""
    return is_maximal_triangle_free(g).holds and check_d(g, 4).holds
