"""The lemma-check registry: completeness, payloads, selected check runs."""

from __future__ import annotations

import pytest

from trifree.families import mycielski_grotzsch, vega
from trifree.formats import parse_elist
from trifree.graph import find_induced_all
from trifree.verify import (
    SEEDS,
    _nine_vertex_assert,
    check_names,
    ext_set,
    run_check,
)

EXPECTED_CHECKS = [
    "c310", "degree_table", "edge_identity", "cube_lemma", "graph_n_lemma",
    "beautiful", "indep_classification", "no_small_neighborhood",
    "aux_embeddings", "gamma_twin_attach", "vega_twin_attach",
    "automorphisms", "cayley_d2", "kappa_blowup", "hexagon_prop",
]


def test_registry_is_complete():
    assert check_names() == EXPECTED_CHECKS


def test_unknown_check_name():
    with pytest.raises(KeyError):
        run_check("nonexistent")


def test_reports_carry_seeds_and_parameters():
    report = run_check("degree_table", i_max=4)
    assert report.name == "degree_table"
    assert report.parameters == {"i_max": 4}
    assert report.passed and report.counterexample is None
    assert report.seed is None  # deterministic check
    seeded = run_check("no_small_neighborhood", i_max=2, per_member=2)
    assert seeded.seed == SEEDS["no_small_neighborhood"]


def test_deletion_pair_check_details():
    report = run_check("c310", i_values=(2,))
    assert report.passed
    pairs = report.details["pairs"]["2"]
    # the defining deletion pair: the last red-adjacent inner vertex with
    # the apex, and its images under the symmetries
    assert [3, 12] in pairs
    assert sorted(map(tuple, pairs)) == [(0, 11), (0, 12), (3, 11), (3, 12)]


def test_automorphism_orders_check():
    report = run_check("automorphisms")
    assert report.passed
    assert report.details["orders"] == {
        "2,0,0": 8, "2,1,1": 10, "3,0,0": 4, "3,0,1": 4, "3,1,0": 2, "3,1,1": 2,
    }


def test_edge_identity_details():
    report = run_check("edge_identity")
    assert report.passed
    assert report.details["differences"] == {2: 8, 3: 9, 4: 10, 5: 11, 6: 12}


def test_kappa_and_cayley_checks():
    assert run_check("kappa_blowup").passed
    assert run_check("cayley_d2", k_max=2).passed


def test_failure_payload_revalidates():
    # the nine-vertex pattern alone is not in the covered class, so its own
    # identity embedding violates the common-neighbor conclusion; this
    # exercises the payload plumbing with a genuine failure
    from trifree.families import graph_n

    host = graph_n()
    payload = _nine_vertex_assert(host, tuple(range(9)))
    assert payload is not None
    rebuilt = parse_elist(payload["graph"])
    assert rebuilt.adj == host.adj
    again = _nine_vertex_assert(rebuilt, tuple(payload["embedding"]))
    assert again is not None
    assert again["index"] == payload["index"]


def test_ext_sets_are_inside_the_missing_neighborhood():
    pattern = mycielski_grotzsch()[0]
    for i_param in (2, 3):
        host = vega(i_param, 0, 0)[0]
        for emb in find_induced_all(host, pattern):
            for outer in range(5):
                ext = ext_set(host, emb, outer)
                for q in ext.vertices:
                    assert host.has_edge(q, emb.map[(outer - 1) % 5])
                    assert host.has_edge(q, emb.map[(outer + 1) % 5])
                    assert host.has_edge(q, emb.map[5 + outer])
                    assert host.has_edge(q, emb.map[outer])  # the lemma's content
                assert ext.reliable == (not ext.vertices)
