import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mesh
from meshca import generate_grid, generate_random, load_wmn, save_wmn
from meshca.errors import (
    ChannelBudgetError,
    ConnectivityError,
    DerivedEdgeMismatchError,
    DuplicateNodeIdError,
    SchemaError,
    TopologyError,
)
from oracles import pairwise_edges


@pytest.mark.parametrize("n,nodes,edges", [(5, 25, 40), (2, 4, 4), (3, 9, 12), (10, 100, 180)])
def test_grid_counts(n, nodes, edges):
    g = generate_grid(n, 2, 3)
    assert g.n == nodes
    assert len(g.edges) == edges == 2 * n * (n - 1)


def test_grid_rejects_channel_budget():
    with pytest.raises(ChannelBudgetError):
        generate_grid(5, 2, 2)


def test_grid_rejects_tiny():
    with pytest.raises(TopologyError):
        generate_grid(1, 2, 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_grid_degrees(n):
    g = generate_grid(n, 2, 3)
    degrees = [g.degree(i) for i in range(g.n)]
    assert set(degrees) <= {2, 3, 4}
    assert degrees.count(2) == 4


def test_edges_match_pairwise_check():
    for g in (generate_grid(6, 2, 3), generate_random(30, 1000, 250, 3, 4, seed=3)):
        positions = [n.position for n in g.nodes]
        assert set(g.edges) == pairwise_edges(positions, g.range_m)


def test_random_fifty_nodes_is_deterministic():
    a = generate_random(50, 1500, 250, 3, 4, seed=7)
    b = generate_random(50, 1500, 250, 3, 4, seed=7)
    assert a == b
    assert a.n == 50
    assert all(n.radio_count == 3 for n in a.nodes)
    assert set(a.edges) == pairwise_edges([n.position for n in a.nodes], 250)


def test_random_two_nodes():
    g = generate_random(2, 10, 250, 1, 2, seed=1)
    assert g.n == 2 and len(g.edges) == 1


def test_random_unreachable_connectivity():
    with pytest.raises(ConnectivityError):
        generate_random(3, 10000, 1, 1, 2, seed=1)


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(0, 10_000), n=st.integers(2, 15))
def test_random_determinism_property(seed, n):
    assert generate_random(n, 600, 250, 2, 3, seed) == generate_random(n, 600, 250, 2, 3, seed)


def test_round_trip_grid():
    g = generate_grid(5, 2, 3)
    doc = json.loads(json.dumps(save_wmn(g)))
    assert "edges" not in doc
    assert load_wmn(doc) == g


def test_round_trip_random_floats():
    g = generate_random(20, 800, 250, 3, 4, seed=11)
    assert load_wmn(json.loads(json.dumps(save_wmn(g)))) == g


def test_heterogeneous_radios_load():
    g = mesh([(0, 0), (200, 0), (400, 0)], [1, 3, 2], 4)
    h = load_wmn(save_wmn(g))
    assert h.radio_counts == (1, 3, 2)


def test_duplicate_ids():
    doc = save_wmn(generate_grid(2, 1, 2))
    doc["nodes"][1]["id"] = 3
    doc["nodes"][2]["id"] = 3
    with pytest.raises(DuplicateNodeIdError):
        load_wmn(doc)


def test_edge_list_mismatch():
    doc = save_wmn(generate_grid(2, 1, 2))
    doc["edges"] = [[0, 1], [0, 3]]
    with pytest.raises(DerivedEdgeMismatchError):
        load_wmn(doc)


def test_matching_edge_list_accepted():
    g = generate_grid(2, 1, 2)
    doc = save_wmn(g)
    doc["edges"] = [list(e) for e in g.sorted_edges]
    assert load_wmn(doc) == g


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.pop("range_m"),
        lambda d: d.update(channel_count="three"),
        lambda d: d["nodes"][0].update(radios=0),
        lambda d: d["nodes"][0].pop("x"),
    ],
)
def test_schema_violations(mutate):
    doc = save_wmn(generate_grid(2, 1, 2))
    mutate(doc)
    with pytest.raises(SchemaError):
        load_wmn(doc)


def test_disconnected_document():
    doc = save_wmn(generate_grid(2, 1, 2))
    doc["nodes"][3].update(x=5000.0, y=5000.0)
    with pytest.raises(ConnectivityError):
        load_wmn(doc)


def test_loader_checks_channel_budget():
    doc = save_wmn(generate_grid(2, 2, 3))
    doc["channel_count"] = 2
    with pytest.raises(ChannelBudgetError):
        load_wmn(doc)


def test_error_kinds_are_distinct():
    kinds = {SchemaError, DuplicateNodeIdError, ConnectivityError, DerivedEdgeMismatchError}
    assert len(kinds) == 4
    for a in kinds:
        for b in kinds - {a}:
            assert not issubclass(a, b)
