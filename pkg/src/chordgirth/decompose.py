"""Petersen decompositions and bridge elimination for cubic graphs."""

from __future__ import annotations

from .graph import DecomposedGraph, Edge, Graph, edge, find_bridges, girth, is_connected, validate
from .matching import maximum_matching


class DecompositionError(ValueError):
    pass


def trace_cycles(n: int, edges) -> list[tuple[int, ...]]:
    """Split a 2-regular edge set into cycles, each starting at its smallest vertex."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    cycles = []
    for s in range(n):
        if seen[s]:
            continue
        if len(nbrs[s]) != 2:
            raise DecompositionError(f"vertex {s} has degree {len(nbrs[s])} in the 2-factor")
        cyc = [s]
        seen[s] = True
        prev, cur = s, min(nbrs[s])
        while cur != s:
            if len(nbrs[cur]) != 2:
                raise DecompositionError(f"vertex {cur} has degree {len(nbrs[cur])} in the 2-factor")
            cyc.append(cur)
            seen[cur] = True
            a, b = nbrs[cur]
            prev, cur = cur, (b if a == prev else a)
        cycles.append(tuple(cyc))
    return cycles


def petersen_decompose(g: Graph) -> DecomposedGraph:
    """Split a bridgeless cubic graph into a perfect matching and a 2-factor."""
    if not g.is_regular(3):
        raise DecompositionError("graph is not cubic")
    bridges = find_bridges(g)
    if bridges:
        raise DecompositionError(f"graph has bridge(s) {bridges}; run eliminate_bridges first")
    matching = maximum_matching(g)
    if 2 * len(matching) != g.n:
        raise DecompositionError(
            f"maximum matching has {len(matching)} edges, a perfect one needs {g.n // 2}")
    factor = [e for e in g.edges if e not in matching]
    dg = DecomposedGraph(g, trace_cycles(g.n, factor), matching)
    problems = validate(dg)
    if problems:
        raise DecompositionError("; ".join(problems))
    return dg


def rewire_bridge(g: Graph, bridge: Edge) -> Graph:
    """One rewiring step on ``bridge = xy``.

    Removes ``xx'`` and ``yy'`` and adds ``xy'`` and ``yx'``. Neighbour pairs
    are tried in increasing order; the first one that keeps the graph
    simple and connected, lowers the bridge count, and does not lower the
    girth is taken.
    """
    x, y = bridge
    before = len(find_bridges(g))
    old_girth = girth(g)
    edges = set(g.edges)
    for xp in g.adj[x]:
        if xp == y:
            continue
        for yp in g.adj[y]:
            if yp == x:
                continue
            new = {edge(x, yp), edge(y, xp)}
            if new & edges or xp == yp:
                continue
            cand = Graph(g.n, (edges - {edge(x, xp), edge(y, yp)}) | new)
            if not is_connected(cand):
                continue
            if len(find_bridges(cand)) >= before:
                continue
            if girth(cand) < old_girth:
                continue
            return cand
    raise DecompositionError(f"no admissible rewiring for bridge {bridge}")


def eliminate_bridges(g: Graph) -> Graph:
    if not g.is_regular(3):
        raise DecompositionError("graph is not cubic")
    if not is_connected(g):
        raise DecompositionError("graph is not connected")
    bridges = find_bridges(g)
    while bridges:
        g = rewire_bridge(g, bridges[0])
        bridges = find_bridges(g)
    return g
