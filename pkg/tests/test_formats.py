from __future__ import annotations

import networkx as nx
import pytest

from normalcol.errors import DegreeError, ParseError
from normalcol.formats import detect_format, parse_graph, write_graph
from normalcol.graphs import CubicGraph, catalog

from conftest import bridged_multigraph, triple_edge

K4_TEXT = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"


def test_edge_list_k4():
    g = parse_graph(K4_TEXT, "edge-list")
    assert g.n == 4 and g.m == 6
    assert g.edges == catalog("k4").edges


def test_edge_list_roundtrip(petersen):
    text = write_graph(petersen, "edge-list")
    again = parse_graph(text, "edge-list")
    assert again.n == petersen.n and again.edges == petersen.edges


def test_edge_list_degree_error():
    bad = "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n"
    with pytest.raises(DegreeError):
        parse_graph(bad, "edge-list")


def test_edge_list_parse_errors():
    with pytest.raises(ParseError):
        parse_graph("", "edge-list")
    with pytest.raises(ParseError):
        parse_graph("4\n0 1\n", "edge-list")
    with pytest.raises(ParseError):
        parse_graph("4 1\n0 9\n", "edge-list")
    with pytest.raises(ParseError):
        parse_graph("4 1\nx y\n", "edge-list")


def _nx_multigraph(g: CubicGraph) -> nx.MultiGraph:
    out = nx.MultiGraph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


@pytest.mark.parametrize(
    "graph",
    [catalog("k4"), catalog("petersen"), catalog("q3"), catalog("k33"),
     catalog("prism", 6), bridged_multigraph(), triple_edge()],
    ids=["k4", "petersen", "q3", "k33", "prism6", "bridged-multi", "triple"],
)
def test_sparse6_roundtrip_and_reference(graph):
    # our encoder must agree byte for byte with the reference implementation
    ours = write_graph(graph, "sparse6")
    ref = nx.to_sparse6_bytes(_nx_multigraph(graph), header=False).decode("ascii")
    assert ours == ref

    # and parsing a reference-encoded string must recover the labeled graph
    again = parse_graph(ref, "sparse6")
    assert again.n == graph.n
    assert sorted(again.edges) == sorted(graph.edges)


def test_sparse6_parse_reference_petersen():
    ref = nx.to_sparse6_bytes(_nx_multigraph(catalog("petersen")), header=False)
    g = parse_graph(ref.decode("ascii"), "sparse6")
    assert (g.n, g.m) == (10, 15)


def test_sparse6_header_accepted(petersen):
    body = write_graph(petersen, "sparse6")
    g = parse_graph(">>sparse6<<" + body, "sparse6")
    assert g.n == 10


def test_sparse6_parse_errors():
    with pytest.raises(ParseError):
        parse_graph("no-colon", "sparse6")
    with pytest.raises(ParseError):
        parse_graph(":", "sparse6")


def test_detect_format(petersen):
    assert detect_format(write_graph(petersen, "sparse6")) == "sparse6"
    assert detect_format(K4_TEXT) == "edge-list"


def test_unknown_format(petersen):
    with pytest.raises(ValueError):
        write_graph(petersen, "graph6")
    with pytest.raises(ValueError):
        parse_graph(K4_TEXT, "graph6")
