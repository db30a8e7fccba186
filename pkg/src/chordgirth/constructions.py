"""Explicit graph families with a prescribed 2-factor/chord split, and random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .graph import DecomposedGraph, Graph, edge


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class Gamma2Params:
    l: int

    def __post_init__(self):
        if self.l < 1:
            raise ConstructionError(f"l must be >= 1, got {self.l}")

    @property
    def n(self) -> int:
        return 8 * self.l ** 2 + 6 * self.l

    @property
    def girth_target(self) -> int:
        return 4 * self.l + 2

    @property
    def offsets(self) -> tuple[int, ...]:
        return tuple(4 * self.l * (j + 1) + 1 for j in range(self.l))

    def chords(self) -> list[tuple[int, int]]:
        # Every even x is 2*l*block + 2*j with 0 <= j < l; its partner is x + a_j.
        n, l, a = self.n, self.l, self.offsets
        return [edge(x, (x + a[(x % (2 * l)) // 2]) % n) for x in range(0, n, 2)]


def construct_gamma2(l: int) -> DecomposedGraph:
    """Hamilton cycle ``0..n-1`` plus the rotation-invariant odd-offset chords."""
    p = Gamma2Params(l)
    return DecomposedGraph.from_parts(p.n, [tuple(range(p.n))], p.chords())


def construct_gamma3(l: int) -> DecomposedGraph:
    """Same chords as :func:`construct_gamma2`, factor split into even and odd vertices."""
    p = Gamma2Params(l)
    cycles = [tuple(range(0, p.n, 2)), tuple(range(1, p.n, 2))]
    return DecomposedGraph.from_parts(p.n, cycles, p.chords())


def blow_up(h: Graph) -> DecomposedGraph:
    """Replace each vertex of a d-regular graph by a 2d-cycle.

    Vertex ``v`` of ``h`` owns cycle vertices ``2d*v .. 2d*v + 2d - 1``.
    The i-th neighbour of ``v`` (by index) uses ports ``i`` and ``i + d``;
    every base edge becomes two chords, one between the paired ports and
    one between their antipodes.
    """
    if h.n == 0:
        raise ConstructionError("empty base graph")
    d = h.degree(0)
    if not h.is_regular(d):
        raise ConstructionError("base graph is not regular")
    if d < 2:
        raise ConstructionError(f"base graph has degree {d} < 2")
    size = 2 * d
    cycles = [tuple(range(size * v, size * v + size)) for v in range(h.n)]
    port = [{w: i for i, w in enumerate(h.adj[v])} for v in range(h.n)]
    chords = []
    for v1, v2 in h.edges:
        i, j = port[v1][v2], port[v2][v1]
        chords.append((size * v1 + i, size * v2 + j))
        chords.append((size * v1 + i + d, size * v2 + j + d))
    return DecomposedGraph.from_parts(size * h.n, cycles, chords)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def projective_points(q: int) -> list[tuple[int, int, int]]:
    """Normalised representatives (first nonzero coordinate 1) of PG(2, q)."""
    pts = []
    for v in product(range(q), repeat=3):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def projective_plane_incidence(q: int) -> Graph:
    """Points-vs-lines graph of PG(2, q) for prime ``q``.

    Points are vertices ``0..N-1``, lines ``N..2N-1``; a line is the kernel
    of a linear form, so incidence is a zero dot product mod ``q``.
    """
    if not _is_prime(q):
        raise ConstructionError(f"q={q} is not prime (prime powers are not supported)")
    pts = projective_points(q)
    N = len(pts)
    edges = []
    for i, p in enumerate(pts):
        for j, ln in enumerate(pts):
            if (p[0] * ln[0] + p[1] * ln[1] + p[2] * ln[2]) % q == 0:
                edges.append((i, N + j))
    return Graph(2 * N, edges)


def random_decomposed_regular(n: int, d: int, seed, max_tries: int = 10_000) -> DecomposedGraph:
    """Hamilton cycle ``0..n-1`` plus ``d-2`` random perfect matchings as chords."""
    if d < 3:
        raise ConstructionError(f"d must be >= 3, got {d}")
    if n % 2 or n < d + 1:
        raise ConstructionError(f"need even n >= d+1, got n={n}, d={d}")
    rng = random.Random(seed)
    cycle = {edge(i, (i + 1) % n) for i in range(n)}
    verts = list(range(n))
    # Restart all matchings on a clash, so the chord set is uniform among valid ones.
    for _attempt in range(max_tries):
        used = set(cycle)
        chords: list[tuple[int, int]] = []
        for _ in range(d - 2):
            rng.shuffle(verts)
            pairs = [edge(verts[i], verts[i + 1]) for i in range(0, n, 2)]
            if any(p in used for p in pairs):
                break
            used.update(pairs)
            chords.extend(pairs)
        else:
            break
    else:
        raise ConstructionError(f"rejection budget exhausted (seed={seed!r}, n={n}, d={d})")
    return DecomposedGraph.from_parts(n, [tuple(range(n))], chords)


def random_cubic(n: int, seed) -> Graph:
    return random_decomposed_regular(n, 3, seed).graph


def _open_block(size: int, slots: int, rng: random.Random, offset: int):
    """Edges of a connected block whose listed vertices each miss one edge.

    ``slots`` is 1 (odd ``size``: a cubic graph with one edge subdivided)
    or 2 (even ``size``: a cubic graph with one edge removed).
    """
    if slots == 1:
        base = random_cubic(size - 1, rng.random())
        u, v = base.edges[rng.randrange(base.m)]
        w = size - 1
        edges = [e for e in base.edges if e != (u, v)] + [(u, w), (v, w)]
        open_ = [w]
    else:
        base = random_cubic(size, rng.random())
        u, v = base.edges[rng.randrange(base.m)]
        edges = [e for e in base.edges if e != (u, v)]
        open_ = [u, v]
    return [(a + offset, b + offset) for a, b in edges], [x + offset for x in open_]


def random_bridged_cubic(blocks: int, seed, max_block: int = 10) -> Graph:
    """Connected cubic graph made of ``blocks`` pieces chained by bridges."""
    if blocks < 2:
        raise ConstructionError("need at least two blocks for a bridge")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    offset = 0
    prev_open = None
    for b in range(blocks):
        end = b in (0, blocks - 1)
        if end:
            size = rng.choice([s for s in range(5, max_block + 1) if s % 2 == 1])
        else:
            size = rng.choice([s for s in range(4, max_block + 1) if s % 2 == 0])
        blk, open_ = _open_block(size, 1 if end else 2, rng, offset)
        edges.extend(blk)
        if prev_open is not None:
            edges.append((prev_open, open_[0]))
        prev_open = open_[-1]
        offset += size
    return Graph(offset, edges)
