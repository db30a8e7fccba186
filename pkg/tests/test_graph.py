import networkx as nx
import pytest
from hypothesis import given, settings

from chordgirth.constructions import construct_gamma2
from chordgirth.graph import (
    NO_CYCLE,
    DecomposedGraph,
    Graph,
    GraphError,
    find_bridges,
    girth,
    is_connected,
    is_isomorphic,
    validate,
)
from chordgirth.io import load_named
from chordgirth.solver import enumerate_simple_cycles

from conftest import (
    brute_force_bridges,
    cycle_graph,
    k4,
    k4_minus_edge_pair,
    small_graphs,
    smallest_bridged_cubic,
)


def test_graph_rejects_loops_and_parallel_edges():
    with pytest.raises(GraphError, match="self-loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError, match="parallel"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


@given(small_graphs())
def test_degree_sum_and_incidence(g):
    assert sum(g.degrees()) == 2 * g.m
    for u, v in g.edges:
        assert v in g.adj[u] and u in g.adj[v]


class TestValidate:
    def test_gamma2_is_valid(self):
        assert validate(construct_gamma2(1)) == []

    def test_missing_chords(self):
        c6_matched = Graph(6, [(i, (i + 1) % 6) for i in range(6)] + [(0, 3), (1, 4), (2, 5)])
        report = validate(DecomposedGraph(c6_matched, [tuple(range(6))], []))
        assert "vertex 0 has 0 chords, expected 1" in report

    def test_chord_duplicating_factor_edge(self):
        dg = DecomposedGraph.from_parts(3, [(0, 1, 2)], [(0, 1)])
        assert "edge {0,1} both factor and chord" in validate(dg)

    def test_short_factor_cycle(self):
        dg = DecomposedGraph(Graph(2, [(0, 1)]), [(0, 1)], [])
        assert any("cycle length >= 3" in p for p in validate(dg))

    def test_uncovered_vertex(self):
        dg = DecomposedGraph(Graph(4, [(0, 1), (1, 2), (0, 2)]), [(0, 1, 2)], [])
        assert "vertex 3 is not on any factor cycle" in validate(dg)


class TestGirth:
    def test_heawood(self):
        assert girth(construct_gamma2(1).graph) == 6

    def test_tutte_coxeter(self):
        assert girth(load_named("tutte_coxeter")) == 8

    def test_tree(self):
        assert girth(Graph(4, [(0, 1), (1, 2), (1, 3)])) is NO_CYCLE

    @settings(max_examples=150, deadline=None)
    @given(small_graphs(max_n=10))
    def test_matches_cycle_enumeration(self, g):
        lengths = [len(c) for c in enumerate_simple_cycles(g)]
        assert girth(g) == (min(lengths) if lengths else NO_CYCLE)

    @settings(max_examples=100, deadline=None)
    @given(small_graphs(max_n=16))
    def test_matches_networkx(self, g):
        h = nx.Graph(list(g.edges))
        h.add_nodes_from(range(g.n))
        assert girth(g) == nx.girth(h)


class TestBridges:
    def test_petersen(self, petersen):
        assert find_bridges(petersen) == [] == brute_force_bridges(petersen)

    def test_path(self):
        assert find_bridges(Graph(3, [(0, 1), (1, 2)])) == [(0, 1), (1, 2)]

    def test_two_blocks(self):
        g = k4_minus_edge_pair()
        assert find_bridges(g) == [(3, 4)] == brute_force_bridges(g)

    def test_smallest_bridged_cubic(self):
        g = smallest_bridged_cubic()
        assert g.is_regular(3)
        assert find_bridges(g) == [(4, 9)] == brute_force_bridges(g)

    @settings(max_examples=200, deadline=None)
    @given(small_graphs(max_n=16))
    def test_matches_brute_force(self, g):
        assert find_bridges(g) == brute_force_bridges(g)


def test_is_connected():
    assert is_connected(load_named("petersen"))
    assert not is_connected(Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))
    assert is_connected(Graph(1, []))


class TestIsomorphism:
    def test_heawood_remark(self, heawood):
        assert is_isomorphic(construct_gamma2(1).graph, heawood)

    def test_different_sizes(self):
        assert not is_isomorphic(cycle_graph(6), cycle_graph(7))

    def test_relabelled_c6(self):
        assert is_isomorphic(cycle_graph(6), cycle_graph(6).relabel([3, 5, 0, 2, 4, 1]))

    def test_non_isomorphic_cubic_8(self):
        # Cube and Wagner graph: both cubic on 8 vertices, different girth.
        cube = Graph(8, [(u, u ^ b) for u in range(8) for b in (1, 2, 4) if u < u ^ b])
        wagner = Graph(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)])
        assert not is_isomorphic(cube, wagner)

    def test_size_limit(self):
        with pytest.raises(ValueError):
            is_isomorphic(cycle_graph(65), cycle_graph(65))

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(max_n=9), small_graphs(max_n=9))
    def test_agrees_with_networkx(self, g, h):
        def nxg(x):
            y = nx.Graph(list(x.edges))
            y.add_nodes_from(range(x.n))
            return y
        assert is_isomorphic(g, h) == nx.is_isomorphic(nxg(g), nxg(h))

    def test_k4_self(self):
        assert is_isomorphic(k4(), k4().relabel([2, 0, 3, 1]))
