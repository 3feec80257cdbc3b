import random
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from forestcut.cuts import (
    FOREST,
    INDEPENDENT,
    SearchLimitError,
    connected_sets,
    find_forest_cut,
    find_forest_cut_bruteforce,
    find_independent_cut,
    find_independent_cut_bruteforce,
    half_bound,
    is_cut,
    validate_witness,
    vertex_connectivity,
    vertex_connectivity_bruteforce,
)
from forestcut.generators import (
    base_graph,
    complete,
    cycle,
    k4_blowup,
    k5_minus_e,
    k_triangle,
    octahedron,
    path,
    random_connected,
)
from forestcut.graph import Graph, GraphInputError, to_mask

from conftest import brute_connected
from test_graph import graphs


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9))
def test_connected_sets_match_subset_enumeration(g):
    for size in range(1, g.order + 1):
        found = list(connected_sets(g, size))
        assert len(found) == len(set(found))
        expected = {to_mask(c) for c in combinations(range(g.order), size) if brute_connected(g, c)}
        assert set(found) == expected


def test_half_bound():
    assert [half_bound(n) for n in (3, 4, 5, 6, 7, 8)] == [1, 1, 2, 2, 3, 3]


def test_connectivity_examples():
    assert vertex_connectivity(path(3)) == 1
    assert vertex_connectivity(octahedron()) == 4
    assert vertex_connectivity(k4_blowup(base_graph("petersen"))) == 3
    assert vertex_connectivity(complete(5)) == 4
    assert vertex_connectivity(Graph.from_edges(3, [(0, 1)])) == 0
    assert vertex_connectivity(Graph(1, [0])) == 0


def test_connectivity_matches_bruteforce_and_networkx(corpus):
    for n in range(1, 8):
        for g in corpus[n]:
            kappa = vertex_connectivity(g)
            assert kappa == vertex_connectivity_bruteforce(g)
            if n > 1:
                assert kappa == nx.node_connectivity(_nx(g))


def test_connectivity_random_against_networkx():
    rng = random.Random(7)
    for n in (12, 16, 20):
        for _ in range(20):
            g = random_connected(n, rng)
            assert vertex_connectivity(g) == nx.node_connectivity(_nx(g))


def test_is_cut():
    assert is_cut(path(3), {1})
    assert not is_cut(cycle(6), {0})
    assert is_cut(k_triangle(3), {0, 1, 2})
    assert not is_cut(complete(3), {0, 1, 2})


def test_forest_cut_examples():
    w = find_forest_cut(cycle(6))
    assert w is not None and w.cut.bit_count() == 2
    assert validate_witness(cycle(6), w) == []
    assert find_forest_cut(k_triangle(3)) is None
    assert find_forest_cut(octahedron()) is None


def test_forest_cut_examples_confirmed_by_bruteforce():
    # frozen from the subset oracle: neither graph has a disconnecting forest set
    assert find_forest_cut_bruteforce(k_triangle(3)) is None
    assert find_forest_cut_bruteforce(octahedron()) is None
    g = octahedron()
    cuts_found = [s for s in range(1, 64) if is_cut(g, s)]
    assert cuts_found and all(s.bit_count() == 4 for s in cuts_found)
    for s in cuts_found:
        # a disconnecting 4-set leaves an antipodal pair and induces a 4-cycle
        assert g.induced_size(s) == 4


def test_bruteforce_examples():
    w = find_forest_cut_bruteforce(cycle(6))
    assert w is not None and w.cut.bit_count() == 2
    assert find_forest_cut_bruteforce(complete(5)) is None
    assert find_forest_cut_bruteforce(k5_minus_e()) is None
    with pytest.raises(SearchLimitError):
        find_forest_cut_bruteforce(cycle(17))


def test_independent_cut_examples():
    tree = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    w = find_independent_cut(tree)
    assert w is not None and validate_witness(tree, w) == []
    w = find_independent_cut(cycle(6))
    assert w is not None and w.cut.bit_count() == 2 and validate_witness(cycle(6), w) == []
    assert find_independent_cut(complete(4)) is None


def test_disconnected_input_rejected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    for finder in (find_forest_cut, find_independent_cut, find_forest_cut_bruteforce):
        with pytest.raises(GraphInputError):
            finder(g)


def test_complete_graphs_have_no_cut():
    for n in range(1, 7):
        assert find_forest_cut(complete(n)) is None
        assert find_independent_cut(complete(n)) is None


def test_witness_tiebreak_is_deterministic():
    g = cycle(8)
    assert find_forest_cut(g) == find_forest_cut(g)
    # kappa(C8) = 2, so the first 2-cut in size-then-mask order is returned
    assert find_forest_cut(g).cut == 0b101


def test_oracle_equivalence_exhaustive(corpus):
    for n in range(1, 8):
        for g in corpus[n]:
            for fast, slow, kind in ((find_forest_cut, find_forest_cut_bruteforce, FOREST),
                                     (find_independent_cut, find_independent_cut_bruteforce, INDEPENDENT)):
                a, b = fast(g), slow(g)
                assert (a is None) == (b is None)
                for w in (a, b):
                    if w is not None:
                        assert w.kind == kind
                        assert validate_witness(g, w) == []


def test_trivial_cut_property(corpus):
    for n in range(3, 8):
        for g in corpus[n]:
            if g.size < n * (n - 1) // 2 and vertex_connectivity(g) <= 2:
                assert find_forest_cut(g) is not None


def test_validator_catches_bad_witness():
    from forestcut.cuts import CutWitness

    g = k_triangle(3)
    bad = CutWitness(to_mask({0, 1, 2}), FOREST, to_mask({3}))
    assert "cut does not induce a forest" in validate_witness(g, bad)
