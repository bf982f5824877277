import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import mesh, path3, two_node
from meshca import ChannelAssignment, active_conflicts, build_emmcg, enumerate_links, generate_grid, generate_random
from meshca.conflict import LinkVertex
from meshca.errors import IncompleteAssignmentError
from oracles import as_lists, brute_active_pairs, links, mesh_args, pairwise_emmcg


def _endpoint_pairs(cg, pairs):
    key = lambda v: (cg.vertices[v].endpoint_a, cg.vertices[v].endpoint_b)  # noqa: E731
    return {frozenset((key(a), key(b))) for a, b in pairs}


def _oracle_endpoint_pairs(ls, pairs):
    return {frozenset((ls[a], ls[b])) for a, b in pairs}


def test_enumerate_two_node():
    assert len(enumerate_links(two_node(radios=2, channels=3))) == 4


def test_enumerate_grid():
    assert len(enumerate_links(generate_grid(5, 2, 3))) == 160


def test_enumerate_path():
    assert len(enumerate_links(path3())) == 2


def test_enumerate_order_and_normalization():
    g = mesh([(0, 0), (200, 0), (100, 150)], [2, 1, 3], 4)
    ls = enumerate_links(g)
    keys = [(v.endpoint_a[0], v.endpoint_b[0], v.endpoint_a[1], v.endpoint_b[1]) for v in ls]
    assert keys == sorted(keys)
    assert [v.id for v in ls] == list(range(len(ls)))
    assert [(v.endpoint_a, v.endpoint_b) for v in ls] == links(*mesh_args(g))
    assert len(ls) == 2 * 1 + 2 * 3 + 1 * 3


def test_link_vertex_invariants():
    lv = LinkVertex(0, (4, 1), (2, 0))
    assert lv.endpoint_a == (2, 0) and lv.endpoint_b == (4, 1)
    with pytest.raises(ValueError):
        LinkVertex(0, (1, 0), (1, 1))


def test_two_node_complete():
    cg = build_emmcg(two_node(radios=2, channels=3))
    assert len(cg.colocation_edges) == 6
    assert not cg.interference_edges


def test_path_single_colocation():
    cg = build_emmcg(path3())
    assert cg.colocation_edges == {(0, 1)}
    assert not cg.interference_edges


def test_grid5_counts_frozen():
    # Frozen from tests/oracles.pairwise_emmcg on the 5x5 lattice.
    cg = build_emmcg(generate_grid(5, 2, 3))
    assert len(cg.colocation_edges) == 1744
    assert len(cg.interference_edges) == 3136


@pytest.mark.parametrize(
    "g",
    [
        generate_grid(2, 2, 3),
        generate_grid(3, 2, 3),
        generate_grid(4, 1, 2),
        generate_random(12, 700, 250, 3, 4, seed=2),
        mesh([(0, 0), (200, 0), (100, 150), (400, 20)], [2, 1, 3, 2], 4),
    ],
)
def test_matches_pairwise_builder(g):
    cg = build_emmcg(g)
    ls, coloc, interf = pairwise_emmcg(*mesh_args(g))
    assert _endpoint_pairs(cg, cg.colocation_edges) == _oracle_endpoint_pairs(ls, coloc)
    assert _endpoint_pairs(cg, cg.interference_edges) == _oracle_endpoint_pairs(ls, interf)
    assert not cg.colocation_edges & cg.interference_edges


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_radio_cliques(n):
    cg = build_emmcg(generate_grid(n, 2, 3))
    for vr in cg.radio_links:
        for a in vr:
            for b in vr:
                if a < b:
                    assert (a, b) in cg.colocation_edges


def test_colocation_requires_shared_node(grid3):
    _, cg = grid3
    for a, b in cg.colocation_edges:
        assert set(cg.vertices[a].nodes) & set(cg.vertices[b].nodes)


def test_active_uniform_is_everything(grid3):
    g, cg = grid3
    assert active_conflicts(cg, ChannelAssignment.uniform(g)) == cg.edges


def test_active_path_different_channels():
    g = path3(channels=2)
    cg = build_emmcg(g)
    ca = ChannelAssignment.from_lists([[1], [1], [2]])
    assert active_conflicts(cg, ca) == set()


def test_active_mixed_matches_oracle():
    g = generate_grid(2, 2, 3)
    cg = build_emmcg(g)
    ca = ChannelAssignment.from_lists([[1, 2], [1, 3], [2, 2], [3, 1]])
    ls, _, _ = pairwise_emmcg(*mesh_args(g))
    expected = _oracle_endpoint_pairs(ls, brute_active_pairs(*mesh_args(g), as_lists(ca)))
    got = active_conflicts(cg, ca)
    assert _endpoint_pairs(cg, got) == expected
    assert got  # the mixed assignment still has conflicts to compare


def test_active_incomplete_assignment(grid3):
    _, cg = grid3
    with pytest.raises(IncompleteAssignmentError):
        active_conflicts(cg, ChannelAssignment.from_lists([[1, 2]] * 8))
    with pytest.raises(IncompleteAssignmentError):
        active_conflicts(cg, ChannelAssignment.from_lists([[1]] * 9))


_GRID = generate_grid(3, 2, 3)
_CG = build_emmcg(_GRID)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), min_size=18, max_size=18), st.permutations([1, 2, 3]))
def test_active_subset_and_permutation_invariance(flat, perm):
    ca = ChannelAssignment.from_flat(_GRID, flat)
    pairs = active_conflicts(_CG, ca)
    assert pairs <= _CG.edges
    relabelled = ChannelAssignment.from_flat(_GRID, [perm[c - 1] for c in flat])
    assert len(active_conflicts(_CG, relabelled)) == len(pairs)


def test_active_random_assignments_match_oracle():
    g = generate_random(8, 500, 250, 2, 3, seed=4)
    cg = build_emmcg(g)
    rng = random.Random(0)
    ls, _, _ = pairwise_emmcg(*mesh_args(g))
    for _ in range(20):
        ca = ChannelAssignment.from_flat(g, [rng.randint(1, 3) for _ in range(g.total_radios)])
        expected = _oracle_endpoint_pairs(ls, brute_active_pairs(*mesh_args(g), as_lists(ca)))
        assert _endpoint_pairs(cg, active_conflicts(cg, ca)) == expected
