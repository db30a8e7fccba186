import itertools
import sys

import pytest
from hypothesis import strategies as st

from chordgirth.graph import Graph
from chordgirth.io import load_named


def k4():
    return Graph(4, itertools.combinations(range(4), 2))


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def prism():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def k4_minus_edge_pair():
    """Two K4-minus-an-edge blocks joined by a single edge (8 vertices, not cubic)."""
    a = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    b = [(u + 4, v + 4) for u, v in a]
    return Graph(8, a + b + [(3, 4)])


def smallest_bridged_cubic():
    """Two K4s with one edge subdivided, joined at the subdivision vertices (10 vertices)."""
    block = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    return Graph(10, block + [(u + 5, v + 5) for u, v in block] + [(4, 9)])


@pytest.fixture
def petersen():
    return load_named("petersen")


@pytest.fixture
def heawood():
    return load_named("heawood")


@st.composite
def small_graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)


def brute_force_bridges(g):
    out = []
    for e in g.edges:
        h = g.without_edges([e])
        comps_before = _components(g)
        if _components(h) > comps_before:
            out.append(e)
    return out


def _components(g):
    seen, count = set(), 0
    for s in range(g.n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for check in sorted(mod.RESULTS, key=lambda c: c.number):
        terminalreporter.write_line(check.line())
