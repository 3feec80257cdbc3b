import io as stdio
from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings

from forestcut.generators import FIG2_FIXTURES, complete, cycle, fig2_fixture, k4_blowup, base_graph, octahedron
from forestcut.generators import circulant, path
from forestcut.graph import DuplicateEdgeError, Graph, LoopError, VertexRangeError
from forestcut.io import (
    EDGE_LIST_MULTI,
    CatalogError,
    EdgeListError,
    Graph6Error,
    parse_edge_list,
    parse_graph6,
    stream_catalog,
    write_edge_list,
    write_graph6,
)

from conftest import brute_isomorphic
from test_graph import graphs


def _nx_g6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_k4_is_C_tilde():
    # six ones pack into one group 0b111111 = 63 -> chr(126)
    assert write_graph6(complete(4)) == "C~"
    assert _nx_g6(complete(4)) == "C~"
    assert parse_graph6("C~") == complete(4)


def test_single_vertex():
    assert write_graph6(Graph(1, [0])) == "@"
    assert parse_graph6("@") == Graph(1, [0])


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=12))
def test_graph6_matches_networkx_and_roundtrips(g):
    text = write_graph6(g)
    assert text == _nx_g6(g)
    assert parse_graph6(text) == g
    assert write_graph6(parse_graph6(text)) == text


def test_large_order_header():
    g = cycle(70)
    text = write_graph6(g)
    assert text.startswith("~")
    assert text == _nx_g6(g)
    assert parse_graph6(text) == g


def test_header_prefix_accepted():
    assert parse_graph6(">>graph6<<C~") == complete(4)


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x7f", "B@", "?"])
def test_graph6_errors(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_graph6_nonzero_padding():
    # n=3 has 3 bits; a trailing 1 in the padding is rejected
    with pytest.raises(Graph6Error):
        parse_graph6(chr(66) + chr(63 + 1))


def test_octahedron_roundtrip_isomorphic():
    assert brute_isomorphic(parse_graph6(write_graph6(circulant(6, [1, 2]))), octahedron())


def test_generator_outputs_roundtrip():
    outs = [fig2_fixture(f) for f in FIG2_FIXTURES] + [k4_blowup(base_graph("petersen")), octahedron()]
    for g in outs:
        text = write_graph6(g)
        assert write_graph6(parse_graph6(text)) == text


def test_edge_list():
    assert parse_edge_list("3 2\n0 1\n1 2") == path(3)
    assert write_edge_list(path(3)) == "3 2\n0 1\n1 2\n"
    with pytest.raises(LoopError):
        parse_edge_list("2 1\n0 0")
    with pytest.raises(EdgeListError):
        parse_edge_list("3 3\n0 1\n1 2")
    with pytest.raises(VertexRangeError):
        parse_edge_list("2 1\n0 2")
    with pytest.raises(DuplicateEdgeError):
        parse_edge_list("3 2\n0 1\n1 0")


def test_stream_three_lines(tmp_path):
    p = tmp_path / "cat.g6"
    p.write_text("C~\nBw\n@\n")
    entries = list(stream_catalog(p))
    assert [e.index for e in entries] == [0, 1, 2]
    assert [e.source_line for e in entries] == [0, 3, 6]
    assert entries[0].graph == complete(4)


def test_stream_skip_bad_line(tmp_path):
    p = tmp_path / "cat.g6"
    p.write_text("C~\nC~~~\n@\n")
    stream = stream_catalog(p, on_error="skip")
    entries = list(stream)
    assert len(entries) == 2 and len(stream.diagnostics) == 1
    assert stream.diagnostics[0].offset == 3


def test_stream_abort_is_default(tmp_path):
    p = tmp_path / "cat.g6"
    p.write_text("C~\nC~~~\n@\n")
    with pytest.raises(CatalogError) as info:
        list(stream_catalog(p))
    assert info.value.offset == 3 and info.value.index == 1


def test_stream_empty():
    assert list(stream_catalog(stdio.BytesIO(b""))) == []


def test_stream_edge_list_multi():
    text = b"3 2\n0 1\n1 2\n\n# comment\n4 6\n" + b"".join(f"{u} {v}\n".encode() for u, v in combinations(range(4), 2))
    entries = list(stream_catalog(stdio.BytesIO(text), EDGE_LIST_MULTI))
    assert [e.graph for e in entries] == [path(3), complete(4)]
