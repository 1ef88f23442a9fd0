"""Registry of named instance checks for the structural lemmas.

Statements quantified over the whole recognized class are exercised on a
fixed catalog — the template families plus seeded-random blow-ups — rather
than proven.  Where a lemma's hypothesis or conclusion only depends on twin
classes, blow-up instances are checked through a representative transversal
of the embedded template copy; that reduction is exact because an induced
copy of a twin-free pattern can never use two vertices of one twin class
(they would be twins of the copy).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .families import (
    AndrasfaiId,
    InternalConsistencyError,
    andrasfai,
    aux_paths,
    cayley_6k,
    cube,
    graph_n,
    haggkvist_spec,
    mycielski_grotzsch,
    named_maps,
    upsilon_of_path,
    vega,
)
from .formats import write_elist
from .graph import (
    BlowupSpec,
    Graph,
    _bits,
    blowup,
    find_induced,
    find_induced_all,
    has_twin_property,
    induced_subgraph,
    isomorphic,
    automorphism_order,
)
from .properties import (
    check_d,
    independence_number,
    is_maximal_triangle_free,
    validate_d_witness,
)
from .recognition import RecognitionCertificate, recognize
from .search import _cycle, enumerate_maximal_tf

SEEDS = {
    "cube_lemma": 1031,
    "graph_n_lemma": 1033,
    "beautiful": 1039,
    "no_small_neighborhood": 1049,
    "gamma_twin_attach": 1051,
    "vega_twin_attach": 1061,
}


@dataclass(frozen=True)
class CheckReport:
    name: str
    parameters: dict
    passed: bool
    counterexample: Optional[dict]
    elapsed: float
    seed: Optional[int] = None
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class ExtSet:
    """Common neighbours of a_{i-1}, a_{i+1}, b_i for an embedded copy."""

    index: int
    vertices: tuple[int, ...]

    @property
    def reliable(self) -> bool:
        return not self.vertices


def ext_set(host: Graph, embedding, i: int) -> ExtSet:
    """The extension set at outer index i of an 11-vertex pattern copy."""
    e = embedding.map
    mask = host.adj[e[(i - 1) % 5]] & host.adj[e[(i + 1) % 5]] & host.adj[e[5 + i]]
    return ExtSet(i, tuple(_bits(mask)))


def _fail(graph: Graph, **context) -> dict:
    payload = {"graph": write_elist(graph)}
    payload.update(context)
    return payload


# -- catalog -------------------------------------------------------------


def _templates() -> list[tuple[str, Graph]]:
    out = [(f"circulant k={k}", andrasfai(k)) for k in range(1, 7)]
    for i in (2, 3, 4):
        for mu in (0, 1):
            for nu in (0, 1):
                out.append((f"hexagon i={i} mu={mu} nu={nu}", vega(i, mu, nu)[0]))
    return out


def _random_blowups(count: int, seed: int, max_weight: int = 3):
    """Seeded blow-ups of catalog templates; all satisfy the level-4 property."""
    rng = random.Random(seed)
    templates = _templates()
    out = []
    for index in range(count):
        name, base = templates[index % len(templates)]
        weights = tuple(rng.randint(1, max_weight) for _ in range(base.n))
        out.append((f"blowup[{name}] w={weights}", base, weights, blowup(BlowupSpec(base, weights))))
    return out


def _representative_positions(base: Graph, weights) -> list[int]:
    starts = []
    position = 0
    for w in weights:
        starts.append(position)
        position += w
    return starts


# -- individual checks ----------------------------------------------------


def _check_c310(i_values=(2, 3, 4)):
    all_pairs = {}
    for i in i_values:
        g00 = vega(i, 0, 0)[0]
        g11 = vega(i, 1, 1)[0]
        pairs = []
        for q in range(g00.n):
            for z in range(q + 1, g00.n):
                keep = [v for v in range(g00.n) if v not in (q, z)]
                if isomorphic(induced_subgraph(g00, keep), g11) is not None:
                    pairs.append([q, z])
        if not pairs:
            return False, _fail(g00, i=i, reason="no deletion pair reproduces the reduced member"), {}
        for q, z in pairs:
            if g00.has_edge(q, z):
                return False, _fail(g00, i=i, pair=[q, z], reason="deletion pair is an edge"), {}
        all_pairs[str(i)] = pairs
    return True, None, {"pairs": all_pairs}


def _check_degree_table(i_max=6):
    for i in range(2, i_max + 1):
        g, lab = vega(i, 0, 0)
        spots = {lab.a: i + 3, lab.b: i + 3, lab.u: i + 3, lab.v: i + 3,
                 lab.c: i + 2, lab.w: i + 2, lab.x: 4, lab.y: 4}
        for pos in lab.red + lab.green + lab.blue:
            spots[pos] = i + 2
        for pos, expected in spots.items():
            if g.degree(pos) != expected:
                return False, _fail(g, i=i, vertex=pos, degree=g.degree(pos), expected=expected)
    return True, None


def _check_edge_identity(i_max=6):
    values = {}
    for i in range(2, i_max + 1):
        diff = vega(i, 0, 0)[0].edge_count - vega(i, 1, 1)[0].edge_count
        values[i] = diff
        if diff != i + 6:
            return False, _fail(vega(i, 0, 0)[0], i=i, difference=diff, expected=i + 6)
    return True, None, {"differences": values}


def _check_cube_lemma(blowup_count=30):
    pattern = cube()
    for name, g in _templates():
        if find_induced(g, pattern) is not None:
            return False, _fail(g, member=name, reason="induced cube found")
    for name, _base, _w, host in _random_blowups(blowup_count, SEEDS["cube_lemma"]):
        if find_induced(host, pattern) is not None:
            return False, _fail(host, member=name, reason="induced cube found")
    return True, None


def _nine_vertex_assert(host: Graph, emb_map) -> Optional[dict]:
    for i in range(3):
        a_i, b_i = emb_map[i], emb_map[3 + i]
        c_prev, c_next = emb_map[6 + (i - 1) % 3], emb_map[6 + (i + 1) % 3]
        if host.has_edge(c_prev, c_next):
            continue
        if not (host.adj[a_i] & host.adj[b_i] & host.adj[c_prev] & host.adj[c_next]):
            return _fail(host, index=i, embedding=list(emb_map))
    return None


def _check_graph_n_lemma(blowup_count=30):
    pattern = graph_n()
    for name, g in _templates():
        for emb in find_induced_all(g, pattern):
            bad = _nine_vertex_assert(g, emb.map)
            if bad is not None:
                bad["member"] = name
                return False, bad
    for name, base, weights, host in _random_blowups(blowup_count, SEEDS["graph_n_lemma"], 2):
        starts = _representative_positions(base, weights)
        for emb in find_induced_all(base, pattern):
            bad = _nine_vertex_assert(host, tuple(starts[t] for t in emb.map))
            if bad is not None:
                bad["member"] = name
                return False, bad
    return True, None


def _beautiful_assert(host: Graph, emb_map) -> Optional[dict]:
    for i in range(5):
        common = host.adj[emb_map[(i - 1) % 5]] & host.adj[emb_map[(i + 1) % 5]]
        stray = common & ~host.adj[emb_map[i]]
        if stray:
            q = (stray & -stray).bit_length() - 1
            return _fail(host, index=i, vertex=q, embedding=list(emb_map))
    return None


def _check_beautiful(blowup_count=30):
    pattern, _ = mycielski_grotzsch()
    for name, g in _templates():
        for emb in find_induced_all(g, pattern):
            bad = _beautiful_assert(g, emb.map)
            if bad is not None:
                bad["member"] = name
                return False, bad
    for name, base, weights, host in _random_blowups(blowup_count, SEEDS["beautiful"], 2):
        starts = _representative_positions(base, weights)
        for emb in find_induced_all(base, pattern):
            bad = _beautiful_assert(host, tuple(starts[t] for t in emb.map))
            if bad is not None:
                bad["member"] = name
                return False, bad
    return True, None


def _mask_of(positions) -> int:
    out = 0
    for p in positions:
        out |= 1 << p
    return out


def _small_set(lab, mask: int) -> bool:
    xy = 1 << lab.x
    if lab.y is not None:
        xy |= 1 << lab.y
    if not mask & xy:
        return False
    met = sum(
        1 for cls in (lab.red, lab.green, lab.blue) if mask & _mask_of(cls)
    )
    return met == 2


def _classify_independent(g: Graph, lab, mask: int) -> bool:
    for z in range(g.n):
        if g.adj[z] & mask == mask:
            return True  # inside one neighbourhood
    i = lab.i
    red = _mask_of(lab.red)
    cw = 1 << lab.c | 1 << lab.w
    if lab.mu == 1:
        core = 1 << lab.u | 1 << lab.v | 1 << lab.w
        if mask & core == core and mask & ~(core | 1 << lab.x) == 0:
            return True
    if lab.nu == 1:
        need = 1 << lab.b | 1 << lab.v | 1 << lab.inner(i - 1)
        if mask & need == need and mask & ~(1 << lab.b | 1 << lab.v | red) == 0:
            return True
    need = cw | 1 << lab.inner(0)
    if mask & need == need and mask & ~(cw | red) == 0:
        return True
    if lab.nu == 0:
        green = _mask_of(lab.green)
        need = cw | 1 << lab.inner(2 * i - 1)
        if mask & need == need and mask & ~(cw | green) == 0:
            return True
    return _small_set(lab, mask)


def _independent_masks(g: Graph):
    stack = [(0, 0)]
    while stack:
        v, mask = stack.pop()
        if v == g.n:
            yield mask
            continue
        stack.append((v + 1, mask))
        if not g.adj[v] & mask:
            stack.append((v + 1, mask | 1 << v))


def _check_indep_classification(i_max=4):
    for i in range(2, i_max + 1):
        for mu in (0, 1):
            for nu in (0, 1):
                g, lab = vega(i, mu, nu)
                for mask in _independent_masks(g):
                    if not _classify_independent(g, lab, mask):
                        return False, _fail(
                            g, i=i, mu=mu, nu=nu, independent_set=list(_bits(mask))
                        )
    return True, None


def _check_no_small_neighborhood(i_max=4, per_member=10):
    rng = random.Random(SEEDS["no_small_neighborhood"])
    for i in range(2, i_max + 1):
        for mu in (0, 1):
            for nu in (0, 1):
                base, lab = vega(i, mu, nu)
                for _ in range(per_member):
                    weights = tuple(rng.randint(1, 3) for _ in range(base.n))
                    host = blowup(BlowupSpec(base, weights))
                    starts = _representative_positions(base, weights)
                    into_template = {starts[t]: t for t in range(base.n)}
                    copy_mask = _mask_of(starts)
                    for q in range(host.n):
                        seen = host.adj[q] & copy_mask
                        template_mask = 0
                        for p in _bits(seen):
                            template_mask |= 1 << into_template[p]
                        if _small_set(lab, template_mask):
                            return False, _fail(
                                host, i=i, mu=mu, nu=nu, vertex=q,
                                trace=list(_bits(template_mask)), weights=list(weights),
                            )
    return True, None


def _check_aux_embeddings(i_max=5):
    counts = {}
    for i in range(2, i_max + 1):
        for mu in (0, 1):
            for nu in (0, 1):
                paths = aux_paths(i, mu, nu)
                if not paths:
                    return False, _fail(vega(i, mu, nu)[0], i=i, mu=mu, nu=nu,
                                        reason="no auxiliary paths"), {}
                for path in paths:
                    try:
                        upsilon_of_path(i, mu, nu, path)
                    except InternalConsistencyError as exc:
                        return False, _fail(vega(i, mu, nu)[0], i=i, mu=mu, nu=nu,
                                            path=list(path.labels), reason=str(exc)), {}
                counts[f"{i},{mu},{nu}"] = len(paths)
    return True, None, {"path_counts": counts}


def _bounded_weights(rng, n: int, max_product: int = 48) -> tuple[int, ...]:
    while True:
        weights = tuple(1 + (rng.random() < 0.25) for _ in range(n))
        product = 1
        for w in weights:
            product *= w
        if product <= max_product and product > 1:
            return weights


def _twin_attach_member(template: Graph, forbidden: Optional[Graph],
                        weights) -> Optional[dict]:
    host = blowup(BlowupSpec(template, weights))
    if forbidden is not None and forbidden.n <= host.n:
        if find_induced(host, forbidden) is not None:
            return _fail(host, reason="hypothesis violated: larger template embeds")
    result = has_twin_property(host, template)
    if not result.holds:
        emb, qz, q2, z2 = result.counterexample
        return _fail(host, embedding=list(emb.map), edge=list(qz), pair=[q2, z2],
                     reason="twin property fails")
    starts = _representative_positions(template, weights)
    copy_mask = _mask_of(starts)
    traces = {template_vertex: host.adj[starts[template_vertex]] & copy_mask
              for template_vertex in range(template.n)}
    for q in range(host.n):
        look = host.adj[q] & copy_mask
        if not any(look == trace for trace in traces.values()):
            return _fail(host, vertex=q, reason="vertex is no template-twin")
    return None


def _check_gamma_twin_attach(k_max=4, per_k=5):
    rng = random.Random(SEEDS["gamma_twin_attach"])
    for k in range(1, k_max + 1):
        template = andrasfai(k)
        forbidden = andrasfai(k + 1)
        for _ in range(per_k):
            weights = _bounded_weights(rng, template.n)
            bad = _twin_attach_member(template, forbidden, weights)
            if bad is not None:
                bad["k"] = k
                return False, bad
    return True, None


def _check_vega_twin_attach(i_max=3, per_member=3):
    rng = random.Random(SEEDS["vega_twin_attach"])
    for i in range(2, i_max + 1):
        for mu in (0, 1):
            for nu in (0, 1):
                template = vega(i, mu, nu)[0]
                # members one size up cannot embed in any blow-up here: they
                # are twin-free and larger than the twin quotient
                for _ in range(per_member):
                    weights = _bounded_weights(rng, template.n, 32)
                    bad = _twin_attach_member(template, None, weights)
                    if bad is not None:
                        bad.update({"i": i, "mu": mu, "nu": nu})
                        return False, bad
    return True, None


def _close_group(order: int, generators) -> int:
    idmap = tuple(range(order))
    group = {idmap}
    frontier = [idmap]
    gens = [tuple(g) for g in generators]
    while frontier:
        current = frontier.pop()
        for gen in gens:
            nxt = tuple(gen[current[v]] for v in range(order))
            if nxt not in group:
                group.add(nxt)
                frontier.append(nxt)
    return len(group)


def _check_automorphisms():
    expected = {
        (2, 0, 0): 8, (2, 1, 1): 10,
        (3, 0, 0): 4, (3, 0, 1): 4, (3, 1, 0): 2, (3, 1, 1): 2,
    }
    orders = {}
    for (i, mu, nu), want in expected.items():
        g = vega(i, mu, nu)[0]
        total = automorphism_order(g)
        orders[f"{i},{mu},{nu}"] = total
        if total != want:
            return False, _fail(g, i=i, mu=mu, nu=nu, order=total, expected=want), {}
        maps = named_maps(i, mu, nu)
        generators = [m.perm.map for m in maps if m.source == m.target]
        generated = _close_group(g.n, generators)
        if generated != want:
            return False, _fail(
                g, i=i, mu=mu, nu=nu, generated=generated, expected=want,
                reason="named maps do not generate the full group",
            ), {}
    return True, None, {"orders": orders}


def _check_cayley_d2(k_max=4):
    for k in range(1, k_max + 1):
        g = cayley_6k(k)
        verdict = check_d(g, 2)
        if verdict.holds or verdict.level != 2:
            return False, _fail(g, k=k, reason="level-2 violation expected")
        if not validate_d_witness(g, 2, verdict.witness.weights):
            return False, _fail(g, k=k, witness=list(verdict.witness.weights),
                                reason="witness failed re-validation")
        if find_induced(g, _cycle(6)) is None:
            return False, _fail(g, k=k, reason="no induced hexagon located")
    return True, None


def _check_kappa_blowup():
    spec = haggkvist_spec()
    host = blowup(spec)
    kappa = 9 * 2 - (6 + 1 + 1)
    alpha, _ = independence_number(host)
    if host.n != 3 * kappa - 1 or alpha != kappa:
        return False, _fail(host, order=host.n, alpha=alpha, kappa=kappa)
    if not is_maximal_triangle_free(host).holds:
        return False, _fail(host, reason="expansion is not maximal triangle-free")
    return True, None


def _check_hexagon_prop(n_max=10):
    hexagon = _cycle(6)
    for n in range(2, n_max + 1):
        for g in enumerate_maximal_tf(n):
            hexagon_free = g.n < 6 or find_induced(g, hexagon) is None
            outcome = recognize(g)
            is_circulant_family = (
                isinstance(outcome, RecognitionCertificate)
                and isinstance(outcome.family, AndrasfaiId)
            )
            if hexagon_free != is_circulant_family:
                return False, _fail(g, n=n, hexagon_free=hexagon_free,
                                    recognized_circulant=is_circulant_family)
    return True, None


_REGISTRY: dict[str, Callable] = {
    "c310": _check_c310,
    "degree_table": _check_degree_table,
    "edge_identity": _check_edge_identity,
    "cube_lemma": _check_cube_lemma,
    "graph_n_lemma": _check_graph_n_lemma,
    "beautiful": _check_beautiful,
    "indep_classification": _check_indep_classification,
    "no_small_neighborhood": _check_no_small_neighborhood,
    "aux_embeddings": _check_aux_embeddings,
    "gamma_twin_attach": _check_gamma_twin_attach,
    "vega_twin_attach": _check_vega_twin_attach,
    "automorphisms": _check_automorphisms,
    "cayley_d2": _check_cayley_d2,
    "kappa_blowup": _check_kappa_blowup,
    "hexagon_prop": _check_hexagon_prop,
}


def check_names() -> list[str]:
    return list(_REGISTRY)


def run_check(name: str, **params) -> CheckReport:
    """Run one registered check; unknown names raise KeyError."""
    if name not in _REGISTRY:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(_REGISTRY)}")
    started = time.perf_counter()
    outcome = _REGISTRY[name](**params)
    elapsed = time.perf_counter() - started
    passed, counterexample = outcome[0], outcome[1]
    details = outcome[2] if len(outcome) > 2 else {}
    return CheckReport(
        name=name,
        parameters=params,
        passed=passed,
        counterexample=counterexample,
        elapsed=elapsed,
        seed=SEEDS.get(name),
        details=details,
    )


def run_all(jobs: int = 1) -> list[CheckReport]:
    names = check_names()
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            return pool.map(run_check, names)
    return [run_check(name) for name in names]
