"""Shared test helpers: seeded random graphs and independent oracles.

networkx is used as the second, independently implemented route for
isomorphism, independence numbers and triangle counts; the brute-force
searches below stay deliberately naive so they cannot share a bug with the
library's pruned searches.
"""

from __future__ import annotations

import itertools
import random

import networkx as nx

from trifree.graph import Graph, from_edge_list


def random_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edge_list(n, edges)


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def nx_independence_number(g: Graph) -> int:
    comp = nx.complement(to_nx(g))
    for v in comp.nodes:
        comp.nodes[v]["w"] = 1
    _, weight = nx.max_weight_clique(comp, weight="w")
    return weight


def nx_max_weight_independent_set(g: Graph, weights) -> int:
    comp = nx.complement(to_nx(g))
    positive = [v for v in comp.nodes if weights[v] > 0]
    comp = comp.subgraph(positive)
    if not comp.nodes:
        return 0
    for v in comp.nodes:
        comp.nodes[v]["w"] = weights[v]
    _, weight = nx.max_weight_clique(comp, weight="w")
    return weight


def brute_force_d(g: Graph, k: int):
    """Level and witness of the first covering failure, by raw enumeration."""
    for m in range(1, k + 1):
        for weights in _compositions(3 * m, g.n):
            cover = max(
                sum(weights[v] for v in range(g.n) if g.adj[y] >> v & 1)
                for y in range(g.n)
            )
            if cover <= m:
                return m, weights
    return None, None


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def brute_force_maximal_tf(g: Graph) -> bool:
    for u, v, w in itertools.combinations(range(g.n), 3):
        if g.has_edge(u, v) and g.has_edge(u, w) and g.has_edge(v, w):
            return False
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v):
                continue
            if not any(g.has_edge(u, w) and g.has_edge(v, w) for w in range(g.n)):
                return False
    return True


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edge_list(10, outer + inner + spokes)
