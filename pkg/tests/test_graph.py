import pytest

from raaglie.errors import GraphError, ResourceLimitError
from raaglie.graph import CommutationGraph, cliques, parse_graph, serialize_graph

from conftest import GRAPHS
from oracles import brute_cliques


def test_parse_minigraph(mini):
    assert mini.labels == ("v1", "v2", "v3")
    assert mini.adjacent(1, 2) and mini.adjacent(2, 1)
    assert not mini.adjacent(0, 1) and not mini.adjacent(0, 2)
    assert not mini.adjacent(1, 1)
    assert mini.commute(1, 1)


def test_single_vertex():
    g = parse_graph('{"vertices":["a"],"edges":[]}')
    assert g.r == 1 and not g.edges


@pytest.mark.parametrize(
    "doc, message",
    [
        ('{"vertices":["a","b"],"edges":[["a","a"]]}', "self-loop"),
        ('{"vertices":["a","a"],"edges":[]}', "duplicate"),
        ('{"vertices":["a","b"],"edges":[["a","c"]]}', "not a vertex"),
        ('{"vertices":["a","b"],"edges":[["a","b","a"]]}', "two endpoints"),
        ('{"edges":[]}', "vertices"),
        ("not json", "JSON"),
    ],
)
def test_parse_errors(doc, message):
    with pytest.raises(GraphError, match=message):
        parse_graph(doc)


def test_edges_are_unordered_and_whitespace_is_ignored():
    a = parse_graph('{"vertices": ["x", "y"], "edges": [["y", "x"]]}')
    b = parse_graph('{ "vertices" : [ "x","y" ],\n "edges":[["x","y"],["y","x"]] }')
    assert a == b


def test_vertex_cap():
    with pytest.raises(ResourceLimitError):
        CommutationGraph.from_edges([f"v{i}" for i in range(17)])
    assert CommutationGraph.from_edges([f"v{i}" for i in range(17)], max_vertices=20).r == 17


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_serialize_round_trip(name):
    g = GRAPHS[name]
    assert parse_graph(serialize_graph(g)) == g


def test_cliques_minigraph(mini):
    assert cliques(mini) == [(), (0,), (1,), (2,), (1, 2)]


def test_cliques_edgeless_and_complete(edgeless3, k3):
    assert cliques(edgeless3) == [(), (0,), (1,), (2,)]
    assert len(cliques(k3)) == 8


@pytest.mark.parametrize("name", sorted(GRAPHS))
def test_cliques_match_brute_force_and_are_hereditary(name):
    g = GRAPHS[name]
    found = cliques(g)
    assert sorted(found) == sorted(brute_cliques(g))
    assert found == sorted(found, key=lambda c: (len(c), c))
    family = set(found)
    for c in found:
        for i in range(len(c)):
            assert c[:i] + c[i + 1:] in family


def test_path_graph_cliques():
    g = CommutationGraph.from_edges(["a", "b", "c", "d"], [["a", "b"], ["b", "c"], ["c", "d"]])
    assert sorted(cliques(g)) == sorted(brute_cliques(g))
    assert len(cliques(g)) == 1 + 4 + 3
