"""Shortest cycle using at most ``k`` chords.

The exact solver runs, for every edge ``e = uv``, a breadth-first search
from ``u`` to ``v`` in ``G - e`` over states ``(vertex, chords used)``.
Adding ``e`` back closes a cycle. A state ``(w, c)`` is only expanded if
``w`` has not been reached with ``c`` or fewer chords before, which keeps
every search path simple.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import DecomposedGraph, validate

ORACLE_LIMIT = 20


@dataclass(frozen=True)
class ChordCycleResult:
    length: int
    witness: tuple[int, ...]
    chords_used: int
    budget: int


class SolverError(ValueError):
    pass


def _check_input(dg: DecomposedGraph, k: int, check: bool) -> None:
    if k < 0:
        raise SolverError(f"chord budget must be >= 0, got {k}")
    if check:
        problems = validate(dg)
        if problems:
            raise SolverError("invalid decomposition: " + "; ".join(problems))


def _chord_adjacency(dg: DecomposedGraph) -> list[list[tuple[int, int]]]:
    return [[(w, int(dg.is_chord(v, w))) for w in dg.graph.adj[v]] for v in range(dg.n)]


def split_closed_walk(walk, is_chord, budget: int) -> list[int] | None:
    """A simple cycle inside a closed walk with at most ``budget`` chords.

    The walk is cut at its first repeated vertex; the two fragments are
    closed walks whose chord counts add up to the walk's, so one of them
    stays within budget whenever the whole walk does.
    """
    walk = list(walk)

    def chords(w):
        return sum(is_chord(w[i], w[(i + 1) % len(w)]) for i in range(len(w)))

    if len(walk) < 3:
        return None
    pos: dict[int, int] = {}
    for i, v in enumerate(walk):
        if v in pos:
            j = pos[v]
            inner = walk[j:i]
            outer = walk[:j] + walk[i:]
            found = []
            for frag in (inner, outer):
                if len(frag) >= 3 and chords(frag) <= budget:
                    cyc = split_closed_walk(frag, is_chord, budget)
                    if cyc is not None:
                        found.append(cyc)
            return min(found, key=len) if found else None
        pos[v] = i
    return walk if chords(walk) <= budget else None


def _search(dg: DecomposedGraph, k_max: int) -> list[ChordCycleResult]:
    n = dg.n
    nbrs = _chord_adjacency(dg)
    width = k_max + 1
    best_len = [None] * width
    best_wit: list[tuple[int, ...] | None] = [None] * width

    for u, v in dg.graph.edges:
        start = int(dg.is_chord(u, v))
        if start > k_max:
            continue
        bound = None if None in best_len else max(best_len)
        parent: dict[int, int] = {}
        minc = [width] * n
        minc[u] = start
        s0 = u * width + start
        parent[s0] = -1
        frontier = [s0]
        depth = 0
        hits: dict[int, int] = {}
        while frontier:
            if bound is not None and depth + 2 >= bound:
                break
            nxt = []
            for s in frontier:
                x, c = divmod(s, width)
                for w, ch in nbrs[x]:
                    if x == u and w == v:
                        continue
                    c2 = c + ch
                    if c2 > k_max or c2 >= minc[w]:
                        continue
                    minc[w] = c2
                    t = w * width + c2
                    parent[t] = s
                    if w == v:
                        hits[c2] = depth + 1
                    else:
                        nxt.append(t)
            frontier = nxt
            depth += 1
        for c, d in sorted(hits.items()):
            length = d + 1
            for k in range(c, width):
                if best_len[k] is None or length < best_len[k]:
                    path = []
                    s = v * width + c
                    while s != -1:
                        path.append(s // width)
                        s = parent[s]
                    path.reverse()
                    best_len[k] = length
                    best_wit[k] = tuple(path)

    results = []
    for k in range(width):
        # Factor cycles are chordless, so a valid decomposition always has an answer.
        assert best_len[k] is not None, "no cycle within budget"
        walk = best_wit[k]
        cyc = split_closed_walk(walk, dg.is_chord, k)
        assert cyc is not None and len(cyc) == best_len[k]
        results.append(ChordCycleResult(best_len[k], tuple(cyc), dg.chord_count(cyc), k))
    return results


def min_chord_cycle(dg: DecomposedGraph, k: int, check: bool = True) -> ChordCycleResult:
    _check_input(dg, k, check)
    return _search(dg, k)[k]


def min_chord_cycle_all_k(dg: DecomposedGraph, k_max: int, check: bool = True) -> list[ChordCycleResult]:
    _check_input(dg, k_max, check)
    return _search(dg, k_max)


def enumerate_simple_cycles(g):
    """Every simple cycle once, rooted at its smallest vertex."""
    adj = g.adj
    for root in range(g.n):
        path = [root]
        on_path = {root}
        stack = [iter(w for w in adj[root] if w > root)]
        while stack:
            advanced = False
            for w in stack[-1]:
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                if root in adj[w] and len(path) >= 3 and path[1] < w:
                    yield tuple(path)
                stack.append(iter(x for x in adj[w] if x > root))
                advanced = True
                break
            if not advanced:
                stack.pop()
                on_path.discard(path.pop())


def oracle_min_chord_cycle_all_k(dg: DecomposedGraph, k_max: int) -> list[ChordCycleResult]:
    if dg.n > ORACLE_LIMIT:
        raise SolverError(f"oracle limited to {ORACLE_LIMIT} vertices, got {dg.n}")
    _check_input(dg, k_max, True)
    best: dict[int, tuple[int, tuple[int, ...]]] = {}
    for cyc in enumerate_simple_cycles(dg.graph):
        c = dg.chord_count(cyc)
        key = (len(cyc), cyc)
        if c not in best or key < best[c]:
            best[c] = key
    out = []
    for k in range(k_max + 1):
        cands = [best[c] for c in best if c <= k]
        if not cands:
            raise SolverError(f"no cycle with at most {k} chords")
        length, cyc = min(cands)
        out.append(ChordCycleResult(length, cyc, dg.chord_count(cyc), k))
    return out


def oracle_min_chord_cycle(dg: DecomposedGraph, k: int) -> ChordCycleResult:
    if k < 0:
        raise SolverError(f"chord budget must be >= 0, got {k}")
    return oracle_min_chord_cycle_all_k(dg, k)[k]


def witness_problems(dg: DecomposedGraph, res: ChordCycleResult) -> list[str]:
    """Checks that ``res.witness`` is a simple cycle honouring the budget."""
    w = res.witness
    out = []
    if len(w) < 3:
        out.append("witness shorter than 3")
    if len(set(w)) != len(w):
        out.append("witness repeats a vertex")
    for i in range(len(w)):
        a, b = w[i], w[(i + 1) % len(w)]
        if not dg.graph.has_edge(a, b):
            out.append(f"witness step {a}-{b} is not an edge")
    if len(w) != res.length:
        out.append(f"witness length {len(w)} != reported {res.length}")
    c = dg.chord_count(w)
    if c != res.chords_used:
        out.append(f"witness has {c} chords, reported {res.chords_used}")
    if c > res.budget:
        out.append(f"witness uses {c} chords, budget {res.budget}")
    return out
