"""Exhaustive enumeration, census classification, conjecture hunt, extremal search.

Enumeration proceeds level by level: every triangle-free graph on t+1
vertices arises from one on t vertices by attaching a new vertex to an
independent set (possibly empty), so extending each isomorph-reduced level
and deduplicating by canonical form is complete.  Maximality is filtered
only at the requested order, since deleting a vertex preserves
triangle-freeness but not maximality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Union

from .families import AndrasfaiId, VegaId, andrasfai, extremal_formula, mycielski_grotzsch, vega
from .graph import (
    BlowupSpec,
    Graph,
    _bits,
    blowup,
    canonical_form,
    find_induced,
)
from .properties import (
    check_d,
    check_q,
    independence_number,
    is_maximal_triangle_free,
    is_triangle_free,
)
from .recognition import RecognitionCertificate, certify, recognize

ENUMERATION_GUARD = 12


class ResourceGuardError(RuntimeError):
    """The request exceeds the desk-scale defaults; pass the override to proceed."""


@dataclass(frozen=True)
class CensusRow:
    graph: Graph
    order: int
    d2: bool
    d3: bool
    d4: bool
    q4: bool
    recognized: Optional[Union[AndrasfaiId, VegaId]]
    induced_c6: bool
    contains_upsilon: bool


@dataclass(frozen=True)
class CensusViolation:
    invariant: str
    row: CensusRow


class CensusError(AssertionError):
    def __init__(self, violation: CensusViolation):
        super().__init__(f"census invariant failed: {violation.invariant}")
        self.violation = violation


@dataclass(frozen=True)
class ExtremalResult:
    n: int
    s: int
    k: int
    formula_value: int
    best_found: int
    witnesses: tuple[BlowupSpec, ...]


_tf_levels: list[list[Graph]] = [[], [Graph(1, [0])]]  # triangle-free, canonical, by order
_maximal_cache: dict[int, list[Graph]] = {}
_census_cache: dict[int, list[CensusRow]] = {}


def _independent_subsets(g: Graph) -> Iterator[int]:
    for mask in range(1 << g.n):
        ok = True
        probe = mask
        while probe:
            v = (probe & -probe).bit_length() - 1
            if g.adj[v] & mask:
                ok = False
                break
            probe &= probe - 1
        if ok:
            yield mask


def _extend_level(level: list[Graph]) -> list[Graph]:
    seen: dict[tuple[int, ...], Graph] = {}
    for g in level:
        rows = list(g.adj) + [0]
        for mask in _independent_subsets(g):
            rows[g.n] = mask
            for v in _bits(mask):
                rows[v] |= 1 << g.n
            candidate = Graph(g.n + 1, rows)
            canon, _ = canonical_form(candidate)
            seen.setdefault(canon.adj, canon)
            for v in _bits(mask):
                rows[v] &= ~(1 << g.n)
    return [seen[key] for key in sorted(seen)]


def _tf_graphs(n: int) -> list[Graph]:
    while len(_tf_levels) <= n:
        _tf_levels.append(_extend_level(_tf_levels[-1]))
    return _tf_levels[n]


def enumerate_maximal_tf(n: int, allow_large: bool = False) -> list[Graph]:
    """All maximal triangle-free graphs on n vertices, one per isomorphism
    class, in canonical form, sorted by canonical adjacency."""
    if n < 2:
        raise ValueError(f"order must be at least 2, got {n}")
    if n > ENUMERATION_GUARD and not allow_large:
        raise ResourceGuardError(
            f"enumeration at order {n} exceeds the default guard of "
            f"{ENUMERATION_GUARD}; pass allow_large=True to proceed"
        )
    if n not in _maximal_cache:
        _maximal_cache[n] = [
            g for g in _tf_graphs(n) if is_maximal_triangle_free(g).holds
        ]
    return list(_maximal_cache[n])


def _cycle(n: int) -> Graph:
    rows = [0] * n
    for i in range(n):
        rows[i] |= 1 << ((i + 1) % n)
        rows[(i + 1) % n] |= 1 << i
    return Graph(n, rows)


_C6 = _cycle(6)
_UPSILON = mycielski_grotzsch()[0]


def census_row(g: Graph) -> CensusRow:
    d = check_d(g, 4)
    d2 = d.holds or d.level > 2
    d3 = d.holds or d.level > 3
    q4 = check_q(g, 4).holds
    outcome = recognize(g)
    recognized = outcome.family if isinstance(outcome, RecognitionCertificate) else None
    induced_c6 = find_induced(g, _C6) is not None
    contains_upsilon = g.n >= _UPSILON.n and find_induced(g, _UPSILON) is not None
    return CensusRow(
        graph=g,
        order=g.n,
        d2=d2,
        d3=d3,
        d4=d.holds,
        q4=q4,
        recognized=recognized,
        induced_c6=induced_c6,
        contains_upsilon=contains_upsilon,
    )


def check_census_row(row: CensusRow) -> Optional[CensusViolation]:
    """The characterization-theorem invariants for one classified graph."""
    if row.d4 != (row.recognized is not None):
        return CensusViolation("level-4 covering iff recognized as a blow-up", row)
    if row.q4 != row.d4:
        return CensusViolation("certificate variant agrees with plain covering", row)
    is_andrasfai = isinstance(row.recognized, AndrasfaiId)
    if (not row.induced_c6) != is_andrasfai:
        return CensusViolation("hexagon-free iff recognized over the circulant family", row)
    if row.d3 and row.induced_c6 and not row.contains_upsilon:
        return CensusViolation(
            "level-3 covering with an induced hexagon must contain the 11-vertex pattern",
            row,
        )
    return None


def census(
    n: int, strict: bool = True, allow_large: bool = False, jobs: int = 1
) -> list[CensusRow]:
    """Classify every maximal triangle-free graph on n vertices.

    With ``strict``, the first invariant violation raises CensusError with
    the offending row attached.  ``jobs`` spreads row classification over
    worker processes; enumeration itself is sequential either way, so the
    output order never depends on it.
    """
    if n not in _census_cache:
        graphs = enumerate_maximal_tf(n, allow_large)
        if jobs > 1 and len(graphs) > 1:
            import multiprocessing

            with multiprocessing.Pool(jobs) as pool:
                _census_cache[n] = pool.map(census_row, graphs)
        else:
            _census_cache[n] = [census_row(g) for g in graphs]
    rows = _census_cache[n]
    if strict:
        for row in rows:
            violation = check_census_row(row)
            if violation is not None:
                raise CensusError(violation)
    return list(rows)


def hunt_conjecture(max_n: int, allow_large: bool = False) -> list[Graph]:
    """All maximal triangle-free graphs up to max_n vertices where the
    level-3 covering property holds but level 4 fails.

    Hits are re-validated by direct (non-quotient) searches before being
    reported; completeness over the searched range is the contract, not
    existence of a hit.
    """
    hits = []
    for n in range(2, max_n + 1):
        for g in enumerate_maximal_tf(n, allow_large):
            verdict = check_d(g, 4)
            if not verdict.holds and verdict.level == 4:
                direct3 = check_d(g, 3, direct=True)
                direct4 = check_d(g, 4, direct=True)
                if direct3.holds and not direct4.holds:
                    hits.append(g)
    return hits


def _template_optimum(
    template: Graph, n: int, s: int
) -> tuple[int, list[tuple[int, ...]]]:
    """Best blow-up edge count of one template at order n, independence <= s.

    Walks weight vectors w >= 1 with sum n; prunes on the running maximum
    over maximal independent sets with unassigned weights at their minimum.
    Returns (-1, []) when no feasible weighting exists.
    """
    t = template.n
    if t > n:
        return -1, []
    mis_masks = _maximal_independent_sets(template)
    mis_load = [m.bit_count() for m in mis_masks]  # all-ones placeholder weights
    if max(mis_load) > s:
        return -1, []
    per_vertex = [[j for j, m in enumerate(mis_masks) if m >> v & 1] for v in range(t)]
    nbr = [tuple(_bits(template.adj[v])) for v in range(t)]
    weights = [1] * t
    best = -1
    best_weights: list[tuple[int, ...]] = []

    def walk(v: int, remaining: int, edges_so_far: int) -> None:
        nonlocal best, best_weights
        if v == t:
            if edges_so_far >= best:
                if edges_so_far > best:
                    best = edges_so_far
                    best_weights.clear()
                best_weights.append(tuple(weights))
            return
        if remaining:
            # the tail cannot absorb more than its independence headroom
            absorb = 0
            for u in range(v, t):
                head = min(s - mis_load[j] for j in per_vertex[u])
                absorb += head
                if absorb >= remaining:
                    break
            if absorb < remaining:
                return
        choices = (remaining,) if v == t - 1 else range(remaining + 1)
        for extra in choices:
            weights[v] = 1 + extra
            if extra:
                for j in per_vertex[v]:
                    mis_load[j] += extra
            if all(mis_load[j] <= s for j in per_vertex[v]):
                gained = (1 + extra) * sum(weights[u] for u in nbr[v] if u < v)
                walk(v + 1, remaining - extra, edges_so_far + gained)
            if extra:
                for j in per_vertex[v]:
                    mis_load[j] -= extra
        weights[v] = 1
        return

    walk(0, n - t, 0)
    return best, best_weights


def _maximal_independent_sets(g: Graph) -> list[int]:
    """All maximal independent sets as bitmasks (simple pivoting recursion)."""
    out = []
    full = (1 << g.n) - 1

    def expand(chosen: int, candidates: int, excluded: int) -> None:
        if not candidates and not excluded:
            out.append(chosen)
            return
        pool = candidates | excluded
        pivot = max(_bits(pool), key=lambda v: (~g.adj[v] & candidates).bit_count())
        # branch on candidates that are not complement-neighbours of the pivot
        for v in _bits(candidates & (g.adj[pivot] | (1 << pivot))):
            bit = 1 << v
            keep = ~g.adj[v]  # complement-graph closed neighbourhood of v
            expand(chosen | bit, candidates & keep & ~bit, excluded & keep)
            candidates &= ~bit
            excluded |= bit

    expand(0, full, 0)
    return out


def search_extremal(n: int, s: int, max_order: int = 30) -> ExtremalResult:
    """Best edge count over template blow-ups with order n and independence <= s.

    Templates: the circulant family at the formula index and its neighbours,
    plus every named hexagon-family member fitting the order.  Witnesses are
    deduplicated by canonical form of the expansion.
    """
    if not (3 * s > n and 2 * s <= n):
        raise ValueError(f"s must satisfy n/3 < s <= n/2, got (n, s) = ({n}, {s})")
    if n > max_order:
        raise ResourceGuardError(f"extremal search capped at order {max_order}")
    k = -(-s // (3 * s - n))
    templates: list[tuple[Graph, object]] = []
    for j in (k - 1, k, k + 1):
        if j >= 1 and 3 * j - 1 <= n:
            templates.append((andrasfai(j), AndrasfaiId(j)))
    i = 2
    while 3 * i + 5 <= n:
        for mu in (0, 1):
            for nu in (0, 1):
                if VegaId(i, mu, nu).order <= n:
                    templates.append((vega(i, mu, nu)[0], VegaId(i, mu, nu)))
        i += 1
    best = -1
    specs: list[BlowupSpec] = []
    seen: set[tuple[tuple[int, ...], ...]] = set()
    for template, _ident in templates:
        value, weightings = _template_optimum(template, n, s)
        if value < best:
            continue
        if value > best:
            best = value
            specs = []
            seen = set()
        for w in weightings:
            spec = BlowupSpec(template, w)
            canon, _ = canonical_form(blowup(spec))
            if canon.adj not in seen:
                seen.add(canon.adj)
                specs.append(spec)
    for spec in specs:  # re-validate from scratch
        expanded = blowup(spec)
        free, _ = is_triangle_free(expanded)
        alpha, _ = independence_number(expanded)
        if expanded.n != n or not free or alpha > s or expanded.edge_count != best:
            raise AssertionError("extremal witness failed re-validation")
    return ExtremalResult(n, s, k, extremal_formula(n, s), best, tuple(specs))
