"""Immutable bitset graphs and exact structural operations.

Vertices are the integers 0..n-1.  Every adjacency row is a Python int used
as a bitset, so neighbourhood algebra (intersection, containment, popcount)
stays single-expression and graphs are hashable values.  All operations are
pure functions; nothing here mutates a graph after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Optional, Sequence

MAX_VERTICES = 1024


class ConstructionError(ValueError):
    """The given data cannot describe a simple undirected graph."""


class ContractViolation(RuntimeError):
    """A caller passed data that breaks a documented contract."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph with bitset adjacency rows."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ConstructionError(f"order must be in 1..{MAX_VERTICES}, got {n}")
        rows = tuple(adj)
        if len(rows) != n:
            raise ConstructionError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ConstructionError(f"row {v} references vertices >= {n}")
            if row >> v & 1:
                raise ConstructionError(f"loop at vertex {v}")
            for u in _bits(row):
                if not rows[u] >> v & 1:
                    raise ConstructionError(f"asymmetric adjacency between {u} and {v}")
        self.n = n
        self.adj = rows

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return _bits(self.adj[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            row = self.adj[u] >> (u + 1) << (u + 1)
            for v in _bits(row):
                yield (u, v)

    @property
    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class Permutation:
    """A bijection on 0..n-1, stored as the image list."""

    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.map) != list(range(len(self.map))):
            raise ConstructionError("permutation image list is not a bijection")

    def __call__(self, v: int) -> int:
        return self.map[v]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.map)
        for v, img in enumerate(self.map):
            inv[img] = v
        return Permutation(tuple(inv))

    def then(self, other: "Permutation") -> "Permutation":
        """The composition applying self first, then other."""
        return Permutation(tuple(other.map[img] for img in self.map))


@dataclass(frozen=True)
class Embedding:
    """An injective map from pattern vertices to host vertices."""

    pattern_order: int
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.map) != self.pattern_order or len(set(self.map)) != self.pattern_order:
            raise ConstructionError("embedding map must be injective over the pattern")

    @property
    def image_mask(self) -> int:
        mask = 0
        for v in self.map:
            mask |= 1 << v
        return mask

    @property
    def image(self) -> tuple[int, ...]:
        return tuple(sorted(self.map))


@dataclass(frozen=True)
class TwinPartition:
    """Vertex classes with identical neighbourhood rows."""

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


@dataclass(frozen=True)
class BlowupSpec:
    """A base graph plus a positive integer weight per base vertex."""

    base: Graph
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.weights) != self.base.n:
            raise ConstructionError("one weight per base vertex required")
        if any(w < 1 for w in self.weights):
            raise ConstructionError("blow-up weights must be positive")

    @property
    def expanded_order(self) -> int:
        return sum(self.weights)


# -- construction ------------------------------------------------------


def from_edge_list(n: int, edges: Sequence[tuple[int, int]]) -> Graph:
    """Build a graph from vertex count and an edge list.

    Rejects out-of-range endpoints, loops, and duplicate pairs (in either
    orientation), naming the offending pair.
    """
    rows = [0] * n
    seen: set[frozenset[int]] = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ConstructionError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ConstructionError(f"edge ({u}, {v}) is a loop")
        pair = frozenset((u, v))
        if pair in seen:
            raise ConstructionError(f"duplicate edge ({u}, {v})")
        seen.add(pair)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def relabel(g: Graph, perm: Permutation) -> Graph:
    """The graph with vertex v renamed to perm(v)."""
    if len(perm.map) != g.n:
        raise ContractViolation("permutation length differs from graph order")
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << perm.map[u]
        rows[perm.map[v]] = row
    return Graph(g.n, rows)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """The induced subgraph on `vertices`, relabeled by position."""
    verts = list(vertices)
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for i, v in enumerate(verts):
        for u in _bits(g.adj[v]):
            j = index.get(u)
            if j is not None:
                rows[i] |= 1 << j
    return Graph(len(verts), rows)


# -- canonical labeling and isomorphism --------------------------------


def _mask_of(cell: Sequence[int]) -> int:
    mask = 0
    for v in cell:
        mask |= 1 << v
    return mask


def _refine(rows: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement of an ordered partition.

    Cells split by the multiset of neighbour counts into every current cell;
    sub-cells are ordered by their signature, so refinement is deterministic
    and isomorphism-equivariant.
    """
    while True:
        masks = [_mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(groups[sig])
        if not changed:
            return out
        cells = out


def _leaf_key(rows: Sequence[int], n: int, position: Sequence[int]) -> tuple[int, ...]:
    """Adjacency matrix of the relabeled graph, one int per row, row-major bits."""
    inv = [0] * n
    for v, p in enumerate(position):
        inv[p] = v
    key = []
    for p in range(n):
        row = rows[inv[p]]
        bits = 0
        for q in range(n):
            bits = bits << 1 | (row >> inv[q] & 1)
        key.append(bits)
    return tuple(key)


def _canonical_search(
    rows: Sequence[int], n: int, colors: Optional[Sequence[int]] = None
) -> tuple[tuple[int, ...], tuple[int, ...], list[tuple[int, ...]]]:
    """Backtracking canonical labeling with refinement and orbit pruning.

    Returns (best key, vertex->position permutation, automorphism generators
    discovered along the way).  With `colors`, only color-preserving
    relabelings are considered; cells never cross color boundaries, so the
    color of every canonical position is fixed.
    """
    if colors is None:
        start = [list(range(n))]
    else:
        by_color: dict[int, list[int]] = {}
        for v in range(n):
            by_color.setdefault(colors[v], []).append(v)
        start = [by_color[c] for c in sorted(by_color)]
    start = _refine(rows, start)

    best: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    first: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None
    autos: list[tuple[int, ...]] = []

    def record_leaf(cells: list[list[int]]) -> None:
        nonlocal best, first
        position = [0] * n
        for pos, cell in enumerate(cells):
            position[cell[0]] = pos
        key = _leaf_key(rows, n, position)
        for ref in (first, best):
            if ref is not None and ref[0] == key and ref[1] != tuple(position):
                ref_inv = [0] * n
                for v, p in enumerate(ref[1]):
                    ref_inv[p] = v
                auto = tuple(ref_inv[p] for p in position)
                if auto not in autos:
                    autos.append(auto)
        if first is None:
            first = (key, tuple(position))
        if best is None or key < best[0]:
            best = (key, tuple(position))

    def descend(cells: list[list[int]], prefix: list[int]) -> None:
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            record_leaf(cells)
            return
        cell = cells[target]
        done: set[int] = set()
        for v in cell:
            if v in done:
                continue
            child = cells[:target] + [[v]] + [[u for u in cell if u != v]] + cells[target + 1 :]
            descend(_refine(rows, child), prefix + [v])
            # Close the tried set under automorphisms fixing the prefix:
            # branching on an orbit-mate explores an identical subtree.
            fixing = [a for a in autos if all(a[p] == p for p in prefix)]
            done.add(v)
            frontier = list(done)
            while frontier:
                u = frontier.pop()
                for a in fixing:
                    img = a[u]
                    if img not in done:
                        done.add(img)
                        frontier.append(img)
        return

    descend(start, [])
    assert best is not None
    return best[0], best[1], autos


def twin_partition(g: Graph) -> TwinPartition:
    """Group vertices with identical neighbourhood rows, sorted by least member."""
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    classes = sorted((tuple(vs) for vs in groups.values()), key=lambda c: c[0])
    return TwinPartition(tuple(classes), tuple(c[0] for c in classes))


def quotient(g: Graph, p: TwinPartition) -> Graph:
    """The graph on twin-class representatives.

    `p` must be the current twin partition of `g`; anything stale is a
    contract violation rather than a silent wrong answer.
    """
    if p != twin_partition(g):
        raise ContractViolation("partition is not the twin partition of this graph")
    reps = p.representatives
    index = {r: i for i, r in enumerate(reps)}
    rows = [0] * len(reps)
    for i, r in enumerate(reps):
        for u in _bits(g.adj[r]):
            j = index.get(u)
            if j is None:
                # neighbour is a non-representative twin; its representative
                # carries the same adjacency, so membership is decided there
                continue
            rows[i] |= 1 << j
    # cross-class adjacency is all-or-nothing, so rep rows restricted to reps
    # describe the quotient exactly; rebuild symmetric closure defensively
    for i in range(len(reps)):
        for j in _bits(rows[i]):
            rows[j] |= 1 << i
    return Graph(len(reps), rows)


def blowup(spec: BlowupSpec) -> Graph:
    """Expand each base vertex into an independent block of its weight.

    Blocks are numbered consecutively in base-vertex order and each base edge
    becomes a complete bipartite bundle.
    """
    total = spec.expanded_order
    if total > MAX_VERTICES:
        raise ConstructionError(f"expanded order {total} exceeds {MAX_VERTICES}")
    offsets = [0] * spec.base.n
    acc = 0
    for v in range(spec.base.n):
        offsets[v] = acc
        acc += spec.weights[v]
    block_masks = [
        ((1 << spec.weights[v]) - 1) << offsets[v] for v in range(spec.base.n)
    ]
    rows = [0] * total
    for v in range(spec.base.n):
        nbr_mask = 0
        for u in _bits(spec.base.adj[v]):
            nbr_mask |= block_masks[u]
        for x in range(offsets[v], offsets[v] + spec.weights[v]):
            rows[x] = nbr_mask
    return Graph(total, rows)


def canonical_form(g: Graph) -> tuple[Graph, Permutation]:
    """An isomorphism-invariant relabeling: equal forms iff isomorphic graphs.

    Twin classes are collapsed first and the size-colored quotient is
    canonicalized, which keeps the search tree small on blow-ups and other
    twin-heavy graphs; the canonical graph lists each class as a consecutive
    block in canonical quotient order.
    """
    p = twin_partition(g)
    if len(p.classes) == g.n:
        _, position, _ = _canonical_search(g.adj, g.n)
        perm = Permutation(tuple(position))
        return relabel(g, perm), perm
    reps = p.representatives
    q = quotient(g, p)
    _, qpos, _ = _canonical_search(q.adj, q.n, colors=p.sizes)
    class_at_pos = [()] * q.n
    for i in range(q.n):
        class_at_pos[qpos[i]] = p.classes[i]
    position = [0] * g.n
    next_label = 0
    for cls in class_at_pos:
        for v in cls:
            position[v] = next_label
            next_label += 1
    perm = Permutation(tuple(position))
    return relabel(g, perm), perm


def isomorphic(g: Graph, h: Graph) -> Optional[Permutation]:
    """A vertex bijection carrying g onto h exactly, or None.

    Computed by comparing canonical forms, so the answer is deterministic;
    the returned permutation is re-verified edge-by-edge before returning.
    """
    if g.n != h.n or g.degree_sequence() != h.degree_sequence():
        return None
    cg, pg = canonical_form(g)
    ch, ph = canonical_form(h)
    if cg != ch:
        return None
    perm = pg.then(ph.inverse())
    if relabel(g, perm) != h:
        raise ContractViolation("canonical forms matched but permutation failed re-check")
    return perm


def automorphism_order(g: Graph) -> int:
    """Exact order of the automorphism group.

    Twin classes may be permuted internally at will, so the order is the
    product of class factorials times the number of size-preserving
    automorphisms of the twin quotient, counted by backtracking.
    """
    p = twin_partition(g)
    within = 1
    for c in p.classes:
        within *= factorial(len(c))
    q = quotient(g, p)
    return _count_colored_autos(q, p.sizes) * within


def _count_colored_autos(g: Graph, colors: Sequence[int]) -> int:
    """Count color-preserving automorphisms by backtracking over refined cells."""
    by_color: dict[int, list[int]] = {}
    for v in range(g.n):
        by_color.setdefault(colors[v], []).append(v)
    cells = _refine(g.adj, [by_color[c] for c in sorted(by_color)])
    cell_mask = [0] * g.n
    for cell in cells:
        m = _mask_of(cell)
        for v in cell:
            cell_mask[v] = m
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    image = [0] * g.n
    count = 0

    def assign(step: int, used: int) -> None:
        nonlocal count
        if step == g.n:
            count += 1
            return
        v = order[step]
        cand = cell_mask[v] & ~used
        for q in list(_bits(cand)):
            ok = True
            for earlier in order[:step]:
                if (g.adj[v] >> earlier & 1) != (g.adj[q] >> image[earlier] & 1):
                    ok = False
                    break
            if ok:
                image[v] = q
                assign(step + 1, used | 1 << q)
        return

    assign(0, 0)
    return count


# -- induced pattern search --------------------------------------------


def find_induced_all(host: Graph, pattern: Graph) -> Iterator[Embedding]:
    """All induced embeddings of pattern in host, in deterministic order.

    Pattern vertices are placed highest-degree-first (ties by index) and host
    candidates scanned in increasing order, so the stream is reproducible.
    """
    if pattern.n > host.n:
        return
    order = sorted(range(pattern.n), key=lambda v: (-pattern.degree(v), v))
    full = (1 << host.n) - 1
    assign = [0] * pattern.n

    def place(step: int, used: int) -> Iterator[Embedding]:
        if step == pattern.n:
            yield Embedding(pattern.n, tuple(assign))
            return
        p = order[step]
        cand = full & ~used
        for q in order[:step]:
            hq = host.adj[assign[q]]
            cand &= hq if pattern.has_edge(p, q) else ~hq & full
            if not cand:
                return
        for v in _bits(cand):
            assign[p] = v
            yield from place(step + 1, used | 1 << v)

    yield from place(0, 0)


def find_induced(host: Graph, pattern: Graph) -> Optional[Embedding]:
    """The first induced embedding of pattern in host, or None."""
    return next(find_induced_all(host, pattern), None)


# -- twins relative to a subgraph copy ----------------------------------


def h_twins(g: Graph, h: Embedding, q: int) -> tuple[int, ...]:
    """All vertices whose neighbourhood inside the copy equals that of q.

    `q` must lie in the image of the embedding; the result always contains q
    and may mix copy vertices with outside vertices.
    """
    hmask = h.image_mask
    if not hmask >> q & 1:
        raise ValueError(f"vertex {q} is not in the embedded copy")
    trace = g.adj[q] & hmask
    return tuple(v for v in range(g.n) if g.adj[v] & hmask == trace)


@dataclass(frozen=True)
class TwinPropertyResult:
    holds: bool
    counterexample: Optional[tuple[Embedding, tuple[int, int], int, int]] = None


def has_twin_property(
    g: Graph, f: Graph, e: Optional[tuple[int, int]] = None
) -> TwinPropertyResult:
    """Check the copy-twin adjacency property of f (optionally at one edge).

    For every induced copy H of f in g and every copy edge qz corresponding
    to `e` (or to any edge when `e` is None), every H-twin of q must be
    adjacent to every H-twin of z.  On failure the offending copy, edge and
    twin pair are returned.
    """
    if e is not None and not f.has_edge(*e):
        raise ValueError(f"{e} is not an edge of the pattern")
    seen: set[tuple[int, frozenset[int]]] = set()
    for emb in find_induced_all(g, f):
        if e is None:
            pairs = [(emb.map[u], emb.map[v]) for u, v in f.edges()]
        else:
            pairs = [(emb.map[e[0]], emb.map[e[1]])]
        hmask = emb.image_mask
        for qz in pairs:
            key = (hmask, frozenset(qz))
            if key in seen:
                continue
            seen.add(key)
            q, z = qz
            tq = h_twins(g, emb, q)
            tz_mask = _mask_of(h_twins(g, emb, z))
            for q2 in tq:
                missing = tz_mask & ~g.adj[q2]
                if missing:
                    z2 = next(_bits(missing))
                    return TwinPropertyResult(False, (emb, qz, q2, z2))
    return TwinPropertyResult(True)
