from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forestcut.generators import complete, cycle, k5_minus_e, k_triangle, octahedron, path
from forestcut.graph import (
    DuplicateEdgeError,
    Graph,
    GraphInputError,
    LoopError,
    VertexRangeError,
    build,
    components,
    degree_histogram,
    induced_is_forest,
    is_connected,
    is_dominating,
    is_k_triangle,
    members,
    open_neighborhood,
    to_mask,
)

from conftest import brute_isomorphic


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


def test_build_complete_and_path():
    k4 = build(4, combinations(range(4), 2))
    assert k4.size == 6
    p3 = build(3, [(0, 1), (1, 2)])
    assert p3.degrees() == [1, 2, 1]


def test_build_k5_minus_e():
    g = build(5, [e for e in combinations(range(5), 2) if e != (3, 4)])
    assert (g.order, g.size) == (5, 9)


@pytest.mark.parametrize(
    "order, edges, error",
    [(3, [(0, 3)], VertexRangeError), (3, [(1, 1)], LoopError), (3, [(0, 1), (1, 0)], DuplicateEdgeError)],
)
def test_build_rejects(order, edges, error):
    with pytest.raises(error):
        build(order, edges)
    assert issubclass(error, GraphInputError)


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(AttributeError):
        g.size = 7


def test_open_neighborhood():
    assert open_neighborhood(complete(4), {0}) == to_mask({1, 2, 3})
    assert open_neighborhood(cycle(6), {0}) == to_mask({1, 5})
    assert open_neighborhood(cycle(6), {0, 3}) == to_mask({1, 2, 4, 5})


def test_is_dominating():
    assert is_dominating(complete(4), {0})
    assert not is_dominating(cycle(6), {0})
    assert is_dominating(cycle(6), {0, 3})


def test_components():
    assert is_connected(path(3))
    p3 = path(3)
    assert sorted(components(p3, {0, 2})) == [0b001, 0b100]
    assert is_connected(k5_minus_e())
    assert not is_connected(Graph.from_edges(3, [(0, 1)]))


def test_induced_is_forest():
    assert induced_is_forest(cycle(6), set())
    for s in combinations(range(4), 3):
        assert not induced_is_forest(complete(4), s)
    assert induced_is_forest(cycle(6), {0, 3})
    assert not induced_is_forest(cycle(6), range(6))
    assert induced_is_forest(path(5), range(5))


def test_degree_histogram():
    # K^triangle_3: three hubs of degree 2 + 3, three extras of degree 3
    assert degree_histogram(k_triangle(3)) == {3: 3, 5: 3}
    assert degree_histogram(octahedron()) == {4: 6}
    assert degree_histogram(k5_minus_e()) == {3: 2, 4: 3}


def test_is_k_triangle():
    assert is_k_triangle(k_triangle(3)) == 3
    assert is_k_triangle(octahedron()) is None
    assert brute_isomorphic(complete(4), k_triangle(1))
    assert is_k_triangle(complete(4)) == 1
    assert is_k_triangle(k5_minus_e()) == 2
    assert is_k_triangle(complete(5)) is None


def test_members_roundtrip():
    assert members(to_mask([5, 0, 3])) == (0, 3, 5)


def _brute_forest(g, s):
    """Acyclic iff no induced subset where every vertex has >= 2 induced neighbors (2-core)."""
    core = set(s)
    changed = True
    while changed:
        changed = False
        for v in list(core):
            if sum(1 for u in core if g.has_edge(u, v)) < 2:
                core.discard(v)
                changed = True
    return not core


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_forest_matches_two_core_oracle_and_is_monotone(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    t = data.draw(st.sets(st.sampled_from(sorted(s)))) if s else set()
    assert induced_is_forest(g, s) == _brute_forest(g, s)
    if induced_is_forest(g, s):
        assert induced_is_forest(g, t)


@settings(max_examples=200, deadline=None)
@given(graphs(), st.data())
def test_neighborhood_is_disjoint_from_set(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    nb = open_neighborhood(g, s)
    assert nb & to_mask(s) == 0
    expected = {u for v in s for u in range(g.order) if g.has_edge(u, v)} - s
    assert nb == to_mask(expected)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_histogram_identities(g):
    hist = degree_histogram(g)
    assert sum(hist.values()) == g.order
    assert sum(d * c for d, c in hist.items()) == 2 * g.size


@pytest.mark.parametrize("s", range(1, 8))
def test_k_triangle_edge_count(s):
    g = k_triangle(s)
    assert is_k_triangle(g) == s
    assert (g.order, g.size) == (s + 3, 3 * s + 3)
    assert g.size == 3 * g.order - 6
