"""Constructors for the named graph families, labelings, maps and formulas.

Vertex numbering is fixed so that permutations and golden values are stable:

* circulant families label vertices 0..n-1;
* the vega family puts the surviving inner circulant vertices first (shifted
  down past a deletion), then the hexagon vertices a, v, c, u, b, w, then x,
  then y when present;
* the 11-vertex four-chromatic graph uses a_0..a_4 = 0..4, b_0..b_4 = 5..9,
  centre c = 10.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (
    BlowupSpec,
    ConstructionError,
    Embedding,
    Graph,
    Permutation,
    from_edge_list,
    relabel,
)

COLOURS = ("red", "green", "blue")


class UnavailableMapError(ValueError):
    """The requested named map does not exist on this family member."""


class InternalConsistencyError(RuntimeError):
    """A constructed object failed its own validity re-check."""


@dataclass(frozen=True)
class AndrasfaiId:
    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ConstructionError(f"family index must be >= 1, got {self.k}")


@dataclass(frozen=True)
class VegaId:
    i: int
    mu: int
    nu: int

    def __post_init__(self) -> None:
        if self.i < 2:
            raise ConstructionError(f"inner index must be >= 2, got {self.i}")
        if self.mu not in (0, 1) or self.nu not in (0, 1):
            raise ConstructionError("deletion flags must be 0 or 1")

    @property
    def order(self) -> int:
        return 3 * self.i + 7 - self.mu - self.nu


def andrasfai(k: int) -> Graph:
    """The k-regular circulant on 3k-1 vertices with connection set k..2k-1."""
    if k < 1:
        raise ConstructionError(f"family index must be >= 1, got {k}")
    n = 3 * k - 1
    edges = [
        (u, (u + d) % n)
        for u in range(n)
        for d in range(k, 2 * k)
        if u < (u + d) % n
    ]
    return from_edge_list(n, edges)


@dataclass(frozen=True)
class UpsilonLabeling:
    """Named vertices of the 11-vertex, 20-edge graph."""

    a: tuple[int, int, int, int, int]
    b: tuple[int, int, int, int, int]
    c: int


def mycielski_grotzsch() -> tuple[Graph, UpsilonLabeling]:
    """The 11-vertex graph with edges a_i c, a_i b_{i+-2}, b_i b_{i+2} (mod 5)."""
    a = tuple(range(5))
    b = tuple(range(5, 10))
    c = 10
    edges = []
    for i in range(5):
        edges.append((a[i], c))
        edges.append((a[i], b[(i + 2) % 5]))
        edges.append((a[i], b[(i - 2) % 5]))
        edges.append((b[i], b[(i + 2) % 5]))
    dedup = sorted({(min(u, v), max(u, v)) for u, v in edges})
    return from_edge_list(11, dedup), UpsilonLabeling(a, b, c)


@dataclass(frozen=True)
class VegaLabeling:
    """Positions of the named vertices inside a vega family member.

    ``inner_map[j]`` is the graph position of inner circulant label j, or -1
    when that label was deleted.  The colour classes list surviving inner
    positions only.
    """

    i: int
    mu: int
    nu: int
    inner_map: tuple[int, ...]
    a: int
    b: int
    c: int
    u: int
    v: int
    w: int
    x: int
    y: Optional[int]
    red: tuple[int, ...]
    green: tuple[int, ...]
    blue: tuple[int, ...]
    hexagon: tuple[int, int, int, int, int, int]

    def inner(self, label: int) -> int:
        pos = self.inner_map[label]
        if pos < 0:
            raise KeyError(f"inner vertex {label} was deleted")
        return pos

    def colour_of_label(self, label: int) -> str:
        if label < self.i:
            return "red"
        if label < 2 * self.i:
            return "green"
        return "blue"

    def colour_class(self, colour: str) -> tuple[int, ...]:
        return {"red": self.red, "green": self.green, "blue": self.blue}[colour]

    def names(self) -> dict[int, str]:
        """Position -> display name, for reports and DOT export."""
        out = {}
        for j, pos in enumerate(self.inner_map):
            if pos >= 0:
                out[pos] = str(j)
        for name in ("a", "b", "c", "u", "v", "w", "x"):
            out[getattr(self, name)] = name
        if self.y is not None:
            out[self.y] = "y"
        return out


def vega(i: int, mu: int, nu: int) -> tuple[Graph, VegaLabeling]:
    """A vega family member: inner circulant, coloured hexagon, x and maybe y.

    The inner graph is the order-(3i-1) circulant restricted to the surviving
    labels; a, u see red; b, v see green; c, w see blue; the external hexagon
    is a-v-c-u-b-w; x sees a, b, c; with mu=0, y sees u, v, w, x.  nu=1
    deletes inner label 2i-1 and mu=1 deletes y.
    """
    ident = VegaId(i, mu, nu)
    ninner = 3 * i - 1
    deleted = 2 * i - 1 if nu else -1
    inner_map = []
    pos = 0
    for j in range(ninner):
        if j == deleted:
            inner_map.append(-1)
        else:
            inner_map.append(pos)
            pos += 1
    base = pos
    a, v, c, u, b, w, x = range(base, base + 7)
    y = base + 7 if mu == 0 else None

    edges = []
    for j in range(ninner):
        if inner_map[j] < 0:
            continue
        for d in range(i, 2 * i):
            l = (j + d) % ninner
            if inner_map[l] < 0 or not j < l:
                continue
            edges.append((inner_map[j], inner_map[l]))
    for j in range(ninner):
        if inner_map[j] < 0:
            continue
        if j < i:
            edges += [(a, inner_map[j]), (u, inner_map[j])]
        elif j < 2 * i:
            edges += [(b, inner_map[j]), (v, inner_map[j])]
        else:
            edges += [(c, inner_map[j]), (w, inner_map[j])]
    edges += [(a, v), (v, c), (c, u), (u, b), (b, w), (w, a)]
    edges += [(x, a), (x, b), (x, c)]
    if y is not None:
        edges += [(y, u), (y, v), (y, w), (y, x)]

    graph = from_edge_list(ident.order, edges)
    labeling = VegaLabeling(
        i=i,
        mu=mu,
        nu=nu,
        inner_map=tuple(inner_map),
        a=a,
        b=b,
        c=c,
        u=u,
        v=v,
        w=w,
        x=x,
        y=y,
        red=tuple(inner_map[j] for j in range(i)),
        green=tuple(inner_map[j] for j in range(i, 2 * i) if inner_map[j] >= 0),
        blue=tuple(inner_map[j] for j in range(2 * i, ninner)),
        hexagon=(a, v, c, u, b, w),
    )
    return graph, labeling


def cube() -> Graph:
    """K_{4,4} minus a perfect matching: vertices 0..3 vs 4..7, edge iff i != j."""
    edges = [(i, 4 + j) for i in range(4) for j in range(4) if i != j]
    return from_edge_list(8, edges)


def graph_n() -> Graph:
    """Nine vertices a_i=0..2, b_i=3..5, c_i=6..8 with a_ic_i, b_ic_i, a_ib_j (i != j)."""
    edges = []
    for i in range(3):
        edges.append((i, 6 + i))
        edges.append((3 + i, 6 + i))
        for j in range(3):
            if i != j:
                edges.append((i, 3 + j))
    return from_edge_list(9, edges)


def cayley_6k(k: int) -> Graph:
    """The circulant on 6k vertices with connection set +-{k..2k-1}."""
    if k < 1:
        raise ConstructionError(f"family index must be >= 1, got {k}")
    n = 6 * k
    edges = sorted(
        {
            (min(u, (u + d) % n), max(u, (u + d) % n))
            for u in range(n)
            for d in range(k, 2 * k)
        }
    )
    return from_edge_list(n, edges)


def fig41() -> Graph:
    """A fixed 12-vertex, 24-edge, 4-regular triangle-free graph.

    Vertices a1..a8 = 0..7 and b1..b4 = 8..11.
    """
    names = {f"a{t}": t - 1 for t in range(1, 9)}
    names.update({f"b{t}": 7 + t for t in range(1, 5)})
    pairs = [
        ("b1", "b2"), ("b3", "b4"), ("a2", "b1"), ("b1", "b4"), ("b4", "a5"),
        ("a1", "a4"), ("a4", "a7"), ("a7", "a2"), ("a2", "a5"), ("a5", "a8"),
        ("a8", "a3"), ("a3", "a6"), ("a6", "a1"), ("b1", "a3"), ("a3", "a7"),
        ("a7", "b3"), ("b4", "a4"), ("a4", "a8"), ("a8", "b2"), ("a1", "b2"),
        ("b2", "b3"), ("b3", "a6"), ("a1", "a5"), ("a2", "a6"),
    ]
    return from_edge_list(12, [(names[s], names[t]) for s, t in pairs])


def haggkvist_spec() -> BlowupSpec:
    """The weighting of the 11-vertex graph whose expansion is 10-regular on 29."""
    base, labeling = mycielski_grotzsch()
    weights = [0] * 11
    for pos in labeling.a:
        weights[pos] = 2
    for pos in labeling.b:
        weights[pos] = 3
    weights[labeling.c] = 4
    return BlowupSpec(base, tuple(weights))


# -- named maps ---------------------------------------------------------


@dataclass(frozen=True)
class NamedMap:
    name: str
    source: VegaId
    target: VegaId
    perm: Permutation


_EXCEPTIONAL = {
    "c": 2, 2: "c", "u": "b", "b": "u", 1: "w", "w": 1,
    "x": 0, 0: "x", 3: "y", "y": 3, "a": "a", "v": "v", 4: 4,
}


def _label_items(lab: VegaLabeling):
    for j, pos in enumerate(lab.inner_map):
        if pos >= 0:
            yield j, pos
    for name in ("a", "b", "c", "u", "v", "w", "x"):
        yield name, getattr(lab, name)
    if lab.y is not None:
        yield "y", lab.y


def _map_from_labels(name, src: VegaId, dst: VegaId, label_map) -> NamedMap:
    sg, slab = vega(src.i, src.mu, src.nu)
    tg, tlab = vega(dst.i, dst.mu, dst.nu)
    target_pos = dict(_label_items(tlab))
    images = [0] * sg.n
    for label, pos in _label_items(slab):
        images[pos] = target_pos[label_map(label)]
    perm = Permutation(tuple(images))
    if relabel(sg, perm) != tg:
        raise InternalConsistencyError(f"map {name} on {src} failed validation")
    return NamedMap(name, src, dst, perm)


def named_map(i: int, mu: int, nu: int, name: str) -> NamedMap:
    """One of the maps sigma, tau0, tau1, rho, validated as an isomorphism.

    sigma needs mu=0, tau0 needs nu=0, tau1 needs nu=1 and rho needs i=2
    (rho maps the (mu,nu) member onto the (nu,mu) member); anything else is
    an unavailable-map error.
    """
    ident = VegaId(i, mu, nu)
    ninner = 3 * i - 1
    if name == "sigma":
        if mu != 0:
            raise UnavailableMapError("sigma needs the y vertex (mu=0)")
        swap = {"x": "y", "y": "x", "a": "u", "u": "a", "b": "v", "v": "b", "c": "w", "w": "c"}
        return _map_from_labels(name, ident, ident, lambda s: swap.get(s, s))
    if name == "tau0":
        if nu != 0:
            raise UnavailableMapError("tau0 needs inner vertex 2i-1 (nu=0)")
        swap = {"a": "b", "b": "a", "u": "v", "v": "u"}
        return _map_from_labels(
            name, ident, ident,
            lambda s: swap.get(s, s) if isinstance(s, str) else (2 * i - 1 - s) % ninner,
        )
    if name == "tau1":
        if nu != 1:
            raise UnavailableMapError("tau1 is only defined after deleting inner 2i-1 (nu=1)")
        swap = {"b": "c", "c": "b", "v": "w", "w": "v"}
        return _map_from_labels(
            name, ident, ident,
            lambda s: swap.get(s, s) if isinstance(s, str) else (i - 1 - s) % ninner,
        )
    if name == "rho":
        if i != 2:
            raise UnavailableMapError("rho exists only at inner index 2")
        return _map_from_labels(name, ident, VegaId(2, nu, mu), _EXCEPTIONAL.__getitem__)
    raise UnavailableMapError(f"unknown map name {name!r}")


def named_maps(i: int, mu: int, nu: int) -> list[NamedMap]:
    """All named maps available on this family member."""
    out = []
    if mu == 0:
        out.append(named_map(i, mu, nu, "sigma"))
    out.append(named_map(i, mu, nu, "tau0" if nu == 0 else "tau1"))
    if i == 2:
        out.append(named_map(i, mu, nu, "rho"))
    return out


# -- auxiliary paths and their pattern copies ---------------------------


@dataclass(frozen=True)
class AuxPath:
    """A length-3 inner path whose endpoints share a colour class."""

    labels: tuple[int, int, int, int]
    positions: tuple[int, int, int, int]
    colour: str
    base_index: Optional[int]  # j when the path is j - (j+i) - (j+2i) - (j+1)


def aux_paths(i: int, mu: int, nu: int) -> list[AuxPath]:
    """Every monochromatic-endpoint path of length three in the inner circulant.

    Reversals are identified (the lower endpoint label comes first) and the
    members of the j - (j+i) - (j+2i) - (j+1) family are marked.
    """
    _, lab = vega(i, mu, nu)
    ninner = 3 * i - 1
    alive = [j for j in range(ninner) if lab.inner_map[j] >= 0]
    adj = {
        j: [
            l for l in alive
            if (j - l) % ninner in range(i, 2 * i) or (l - j) % ninner in range(i, 2 * i)
        ]
        for j in alive
    }
    base = {}
    for j in range(ninner):
        quad = (j, (j + i) % ninner, (j + 2 * i) % ninner, (j + 1) % ninner)
        if all(lab.inner_map[q] >= 0 for q in quad):
            base[quad] = j
    out = []
    for p0 in alive:
        for p1 in adj[p0]:
            for p2 in adj[p1]:
                if p2 in (p0, p1):
                    continue
                for p3 in adj[p2]:
                    if p3 in (p0, p1, p2) or p3 < p0:
                        continue
                    if lab.colour_of_label(p0) != lab.colour_of_label(p3):
                        continue
                    quad = (p0, p1, p2, p3)
                    j = base.get(quad)
                    if j is None:
                        j = base.get(quad[::-1])
                    out.append(
                        AuxPath(
                            labels=quad,
                            positions=tuple(lab.inner_map[q] for q in quad),
                            colour=lab.colour_of_label(p0),
                            base_index=j,
                        )
                    )
    out.sort(key=lambda p: p.labels)
    return out


_FIRST = {"red": "a", "green": "b", "blue": "c"}
_SECOND = {"red": "u", "green": "v", "blue": "w"}


def upsilon_of_path(i: int, mu: int, nu: int, pi: AuxPath) -> Embedding:
    """The induced 11-vertex pattern copy determined by an auxiliary path.

    The copy uses the path, x, and the six hexagon vertices, wired by the
    colours of the path entries; the embedding is re-checked to be induced
    before it is returned.
    """
    graph, lab = vega(i, mu, nu)
    if pi not in aux_paths(i, mu, nu):
        raise ValueError("not an auxiliary path of this family member")
    pattern, up = mycielski_grotzsch()
    phi = pi.colour
    chi1 = lab.colour_of_label(pi.labels[1])
    chi2 = lab.colour_of_label(pi.labels[2])
    pos = {name: getattr(lab, name) for name in ("a", "b", "c", "u", "v", "w", "x")}
    p0, p1, p2, p3 = pi.positions
    images = [0] * 11
    images[up.a[0]] = pos[_SECOND[chi1]]
    images[up.a[1]] = p0
    images[up.a[2]] = p3
    images[up.a[3]] = pos[_SECOND[chi2]]
    images[up.a[4]] = pos["x"]
    images[up.b[0]] = p2
    images[up.b[1]] = pos[_FIRST[chi1]]
    images[up.b[2]] = pos[_FIRST[chi2]]
    images[up.b[3]] = p1
    images[up.b[4]] = pos[_SECOND[phi]]
    images[up.c] = pos[_FIRST[phi]]
    emb = Embedding(11, tuple(images))
    for s in range(11):
        for t in range(s + 1, 11):
            if pattern.has_edge(s, t) != graph.has_edge(images[s], images[t]):
                raise InternalConsistencyError(
                    f"path copy is not induced at pattern pair ({s}, {t})"
                )
    return emb


# -- extremal edge-count formula ----------------------------------------


def extremal_formula(n: int, s: int) -> int:
    """Largest edge count of the template blow-up construction at (n, s).

    Exact integer evaluation of k(k-1)n^2/2 - k(3k-4)ns + (3k-4)(3k-1)s^2/2
    with k = ceil(s / (3s - n)); defined for n/3 < s <= n/2.
    """
    if not (3 * s > n and 2 * s <= n):
        raise ValueError(f"s must satisfy n/3 < s <= n/2, got (n, s) = ({n}, {s})")
    k = -(-s // (3 * s - n))
    return (k * (k - 1) * n * n - 2 * k * (3 * k - 4) * n * s + (3 * k - 4) * (3 * k - 1) * s * s) // 2
