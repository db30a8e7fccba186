import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from chordgirth.constructions import random_bridged_cubic, random_cubic
from chordgirth.decompose import (
    DecompositionError,
    eliminate_bridges,
    petersen_decompose,
    rewire_bridge,
    trace_cycles,
)
from chordgirth.graph import Graph, find_bridges, girth, is_connected, validate
from chordgirth.io import load_named
from chordgirth.matching import maximum_matching

from conftest import k4, prism, small_graphs, smallest_bridged_cubic


def brute_force_matching_size(g):
    best = 0
    edges = g.edges

    def rec(i, used, size):
        nonlocal best
        best = max(best, size)
        if size + (len(edges) - i) <= best:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if u not in used and v not in used:
                rec(j + 1, used | {u, v}, size + 1)

    rec(0, frozenset(), 0)
    return best


def perfect_matchings(g):
    for combo in itertools.combinations(g.edges, g.n // 2):
        if len({v for e in combo for v in e}) == g.n:
            yield set(combo)


def factor_lengths(g, matching):
    rest = [e for e in g.edges if e not in matching]
    return sorted(len(c) for c in trace_cycles(g.n, rest))


def _is_matching(g, m):
    verts = [v for e in m for v in e]
    return len(verts) == len(set(verts)) and all(g.has_edge(*e) for e in m)


class TestMaximumMatching:
    def test_petersen(self, petersen):
        m = maximum_matching(petersen)
        assert len(m) == 5 == brute_force_matching_size(petersen)
        assert _is_matching(petersen, m)

    def test_k4(self):
        assert len(maximum_matching(k4())) == 2

    def test_star(self):
        assert len(maximum_matching(Graph(4, [(0, 1), (0, 2), (0, 3)]))) == 1

    def test_blossom_needed(self):
        # Triangle with a pendant path: greedy from the triangle can get stuck.
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
        assert len(maximum_matching(g)) == 3

    @settings(max_examples=200, deadline=None)
    @given(small_graphs(max_n=14))
    def test_matches_brute_force(self, g):
        m = maximum_matching(g)
        assert _is_matching(g, m)
        assert len(m) == brute_force_matching_size(g)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(5, 40), st.integers(0, 10_000))
    def test_matches_networkx_on_larger(self, n, seed):
        h = nx.gnp_random_graph(n, 0.15, seed=seed)
        g = Graph(n, h.edges())
        assert len(maximum_matching(g)) == len(nx.max_weight_matching(h, maxcardinality=True))

    def test_deterministic(self, petersen):
        assert maximum_matching(petersen) == maximum_matching(petersen)


class TestPetersenDecompose:
    def test_petersen_graph(self, petersen):
        # Every perfect matching of the Petersen graph leaves two 5-cycles.
        assert {tuple(factor_lengths(petersen, m)) for m in perfect_matchings(petersen)} == {(5, 5)}
        dg = petersen_decompose(petersen)
        assert validate(dg) == []
        assert sorted(map(len, dg.factor_cycles)) == [5, 5]

    def test_k4(self):
        assert {tuple(factor_lengths(k4(), m)) for m in perfect_matchings(k4())} == {(4,)}
        assert [len(c) for c in petersen_decompose(k4()).factor_cycles] == [4]

    def test_prism(self):
        options = {tuple(factor_lengths(prism(), m)) for m in perfect_matchings(prism())}
        assert options == {(3, 3), (6,)}
        dg = petersen_decompose(prism())
        assert tuple(sorted(map(len, dg.factor_cycles))) in options

    @pytest.mark.parametrize("name", ["heawood", "tutte_coxeter"])
    def test_bundled(self, name):
        g = load_named(name)
        dg = petersen_decompose(g)
        assert validate(dg) == []
        assert len(dg.chords) == g.n // 2

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 30), st.integers(0, 10_000))
    def test_random_bridgeless(self, half, seed):
        dg = petersen_decompose(random_cubic(2 * half, seed))
        assert validate(dg) == []

    def test_rejects_non_cubic(self):
        with pytest.raises(DecompositionError, match="cubic"):
            petersen_decompose(Graph(3, [(0, 1), (1, 2), (0, 2)]))

    def test_rejects_bridges(self):
        with pytest.raises(DecompositionError, match="bridge"):
            petersen_decompose(smallest_bridged_cubic())


class TestEliminateBridges:
    def test_bridgeless_unchanged(self, petersen):
        assert eliminate_bridges(petersen) == petersen

    def test_smallest_bridged(self):
        g = smallest_bridged_cubic()
        out = eliminate_bridges(g)
        assert out.n == 10 and out.is_regular(3) and is_connected(out)
        assert find_bridges(out) == []
        assert girth(out) >= girth(g)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 5), st.integers(0, 10_000))
    def test_random_bridged(self, blocks, seed):
        g = random_bridged_cubic(blocks, seed)
        assert g.is_regular(3) and is_connected(g)
        b = len(find_bridges(g))
        assert b >= blocks - 1
        steps = 0
        cur = g
        while find_bridges(cur):
            nxt = rewire_bridge(cur, find_bridges(cur)[0])
            assert len(find_bridges(nxt)) < len(find_bridges(cur))
            cur = nxt
            steps += 1
        assert steps <= b
        out = eliminate_bridges(g)
        assert out == cur
        assert out.is_regular(3) and is_connected(out) and not find_bridges(out)
        assert girth(out) >= girth(g)
        assert validate(petersen_decompose(out)) == []

    def test_rejects_disconnected(self):
        two_k4 = Graph(8, list(k4().edges) + [(u + 4, v + 4) for u, v in k4().edges])
        with pytest.raises(DecompositionError, match="connected"):
            eliminate_bridges(two_k4)
