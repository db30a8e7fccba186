"""Maximum-cardinality matching in general graphs (Edmonds' blossom algorithm).

Augmenting paths are searched from free vertices in increasing order, and
neighbours are scanned in increasing order, so the output is deterministic.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, edge


def _augment_from(g: Graph, root: int, mate: list[int]) -> bool:
    n = g.n
    parent = [-1] * n
    base = list(range(n))
    in_tree = [False] * n
    in_tree[root] = True
    queue = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] < 0:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if base[v] == base[w] or mate[v] == w:
                continue
            if w == root or (mate[w] >= 0 and parent[mate[w]] >= 0):
                # w is an outer vertex: odd cycle, contract the blossom.
                cur = lca(v, w)
                blossom = [False] * n
                mark_path(v, cur, w, blossom)
                mark_path(w, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not in_tree[i]:
                            in_tree[i] = True
                            queue.append(i)
            elif parent[w] < 0:
                parent[w] = v
                if mate[w] < 0:
                    # Augment along the alternating path ending at w.
                    while w >= 0:
                        pv = parent[w]
                        nxt = mate[pv]
                        mate[w] = pv
                        mate[pv] = w
                        w = nxt
                    return True
                in_tree[mate[w]] = True
                queue.append(mate[w])
    return False


def maximum_matching(g: Graph) -> set[Edge]:
    mate = [-1] * g.n
    for v in range(g.n):
        if mate[v] < 0:
            _augment_from(g, v, mate)
    return {edge(v, mate[v]) for v in range(g.n) if mate[v] > v}
