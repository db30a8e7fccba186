"""Graph and decomposition data model plus the basic graph algorithms.

Vertices are dense integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]

#: Girth of an acyclic graph.
NO_CYCLE = float("inf")

ISOMORPHISM_LIMIT = 64


class GraphError(ValueError):
    """Raised when a graph cannot be built as a simple graph."""


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph."""

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        seen: set[Edge] = set()
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {{{u},{v}}} has a vertex outside 0..{n - 1}")
            e = edge(u, v)
            if e in seen:
                raise GraphError(f"parallel edge {{{e[0]},{e[1]}}}")
            seen.add(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_regular(self, d: int | None = None) -> bool:
        degs = set(self.degrees())
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    def without_edges(self, removed: Iterable[Edge]) -> Graph:
        drop = {edge(*e) for e in removed}
        return Graph(self.n, [e for e in self.edges if e not in drop])

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under ``v -> perm[v]``."""
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


@dataclass(frozen=True)
class DecomposedGraph:
    """A graph with its edges split into a 2-factor and a set of chords.

    No validation happens at construction; call :func:`validate`.
    """

    graph: Graph
    factor_cycles: tuple[tuple[int, ...], ...]
    chords: frozenset[Edge]

    def __init__(self, graph: Graph, factor_cycles, chords):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "factor_cycles", tuple(tuple(c) for c in factor_cycles))
        object.__setattr__(self, "chords", frozenset(edge(*c) for c in chords))

    @classmethod
    def from_parts(cls, n: int, factor_cycles, chords) -> DecomposedGraph:
        """Build the graph as the union of factor edges and chords."""
        edges = set(cycle_edges(factor_cycles)) | {edge(*c) for c in chords}
        return cls(Graph(n, edges), factor_cycles, chords)

    @property
    def n(self) -> int:
        return self.graph.n

    def factor_edges(self) -> list[Edge]:
        return cycle_edges(self.factor_cycles)

    def is_chord(self, u: int, v: int) -> bool:
        return edge(u, v) in self.chords

    def chord_count(self, cycle: Sequence[int]) -> int:
        return sum(self.is_chord(a, b) for a, b in _closed_pairs(cycle))

    def canonical(self) -> DecomposedGraph:
        """Equal-content decomposition with cycles rotated to start at their minimum."""
        cycles = []
        for c in self.factor_cycles:
            i = c.index(min(c))
            r = c[i:] + c[:i]
            if len(r) > 2 and r[-1] < r[1]:
                r = (r[0],) + tuple(reversed(r[1:]))
            cycles.append(r)
        cycles.sort()
        return DecomposedGraph(self.graph, cycles, self.chords)


def _closed_pairs(cycle: Sequence[int]):
    k = len(cycle)
    for i in range(k):
        yield cycle[i], cycle[(i + 1) % k]


def cycle_edges(cycles) -> list[Edge]:
    out = []
    for c in cycles:
        if len(c) < 2:
            continue
        if len(c) == 2:
            out.append(edge(c[0], c[1]))
            continue
        out.extend(edge(a, b) for a, b in _closed_pairs(c))
    return out


def validate(dg: DecomposedGraph) -> list[str]:
    """Every violated invariant of ``dg``, as human-readable messages."""
    g = dg.graph
    problems: list[str] = []
    n = g.n

    covered: dict[int, int] = {}
    factor: list[Edge] = []
    for idx, c in enumerate(dg.factor_cycles):
        if len(c) < 3:
            problems.append(f"factor cycle {idx} has length {len(c)}; cycle length >= 3 required")
        for v in c:
            if not 0 <= v < n:
                problems.append(f"factor cycle {idx} has vertex {v} outside 0..{n - 1}")
            elif v in covered:
                problems.append(f"vertex {v} appears in factor cycles {covered[v]} and {idx}")
            else:
                covered[v] = idx
        if len(c) >= 2:
            factor.extend(edge(a, b) for a, b in _closed_pairs(c) if a != b)
    for v in range(n):
        if v not in covered:
            problems.append(f"vertex {v} is not on any factor cycle")

    factor_set = set(factor)
    if len(factor_set) != len(factor):
        problems.append("factor cycles repeat an edge")
    for u, v in sorted(dg.chords):
        if u == v:
            problems.append(f"chord {{{u},{v}}} is a self-loop")
    for e in sorted(factor_set & dg.chords):
        problems.append(f"edge {{{e[0]},{e[1]}}} both factor and chord")

    edge_set = set(g.edges)
    for e in sorted(factor_set - edge_set):
        problems.append(f"factor edge {{{e[0]},{e[1]}}} is not in the graph")
    for e in sorted(dg.chords - edge_set):
        problems.append(f"chord {{{e[0]},{e[1]}}} is not in the graph")
    for e in sorted(edge_set - factor_set - dg.chords):
        problems.append(f"graph edge {{{e[0]},{e[1]}}} is neither factor nor chord")

    fdeg = [0] * n
    for u, v in factor_set:
        if 0 <= u < n and 0 <= v < n:
            fdeg[u] += 1
            fdeg[v] += 1
    cdeg = [0] * n
    for u, v in dg.chords:
        if 0 <= u < n and 0 <= v < n:
            cdeg[u] += 1
            cdeg[v] += 1
    degs = g.degrees()
    if len(set(degs)) > 1:
        problems.append(f"graph is not regular (degrees {sorted(set(degs))})")
    for v in range(n):
        if fdeg[v] != 2:
            problems.append(f"vertex {v} has {fdeg[v]} factor edges, expected 2")
        expected = degs[v] - 2
        if cdeg[v] != expected:
            problems.append(f"vertex {v} has {cdeg[v]} chords, expected {expected}")
    return problems


def girth(g: Graph) -> int | float:
    """Length of a shortest cycle, or :data:`NO_CYCLE` for a forest.

    BFS from every vertex; a non-tree edge ``uw`` seen from root ``r``
    closes a walk of length ``d(u) + d(w) + 1`` that contains a cycle
    no longer than that, and the root on a shortest cycle sees it exactly.
    """
    best = NO_CYCLE
    n = g.n
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for w in g.adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == g.n


def find_bridges(g: Graph) -> list[Edge]:
    """Cut edges via one iterative DFS with low-point values."""
    n = g.n
    order = [-1] * n
    low = [0] * n
    bridges: list[Edge] = []
    counter = 0
    for start in range(n):
        if order[start] >= 0:
            continue
        order[start] = low[start] = counter
        counter += 1
        # (vertex, parent, neighbour iterator)
        stack = [(start, -1, iter(g.adj[start]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if order[w] < 0:
                    order[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(g.adj[w])))
                    advanced = True
                    break
                low[v] = min(low[v], order[w])
            if advanced:
                continue
            stack.pop()
            if parent >= 0:
                low[parent] = min(low[parent], low[v])
                if low[v] > order[parent]:
                    bridges.append(edge(parent, v))
    return sorted(bridges)


def distance_profile(g: Graph, v: int) -> tuple[int, ...]:
    """Number of vertices at each BFS distance from ``v``."""
    dist = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    counts = [0] * (max(dist.values()) + 1)
    for d in dist.values():
        counts[d] += 1
    return tuple(counts)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Backtracking isomorphism test for small graphs."""
    if max(g1.n, g2.n) > ISOMORPHISM_LIMIT:
        raise ValueError(f"isomorphism check limited to {ISOMORPHISM_LIMIT} vertices")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    n = g1.n
    if n == 0:
        return True
    sig1 = [(g1.degree(v), distance_profile(g1, v)) for v in range(n)]
    sig2 = [(g2.degree(v), distance_profile(g2, v)) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return False

    # Visit g1 in BFS order per component so most vertices have a mapped neighbour.
    order: list[int] = []
    placed = [False] * n
    for s in range(n):
        if placed[s]:
            continue
        placed[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g1.adj[u]:
                if not placed[w]:
                    placed[w] = True
                    queue.append(w)

    adj2 = [set(a) for a in g2.adj]
    fwd = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        mapped_nbrs = [fwd[w] for w in g1.adj[v] if fwd[w] >= 0]
        if mapped_nbrs:
            candidates = sorted(adj2[mapped_nbrs[0]])
        else:
            candidates = range(n)
        for c in candidates:
            if used[c] or sig2[c] != sig1[v]:
                continue
            if any(x not in adj2[c] for x in mapped_nbrs):
                continue
            # Non-adjacency must be preserved too; degree equality plus the
            # adjacency check above covers it once every neighbour is mapped,
            # so count mapped neighbours of c on the g2 side.
            if sum(1 for x in adj2[c] if used[x]) != len(mapped_nbrs):
                continue
            fwd[v] = c
            used[c] = True
            if extend(i + 1):
                return True
            fwd[v] = -1
            used[c] = False
        return False

    return extend(0)
