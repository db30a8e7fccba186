"""Exhaustive computation of gamma_k(n) for small n, and cycle-partition weights.

gamma_k(n) is taken over connected simple cubic graphs together with a
2-factor/chord split: the largest value, over all such pairs, of the
shortest cycle length using at most k chords.

The search fixes one 2-factor per cycle type (cycles laid out on
consecutive vertex blocks, largest first) and enumerates every perfect
matching that avoids factor edges. Matchings that are images of one
another under an automorphism of the 2-factor give isomorphic instances,
so only orbit representatives are solved.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from pathlib import Path

from . import __version__
from .graph import DecomposedGraph
from .io import serialize_decomp
from .solver import min_chord_cycle_all_k


# cycle partitions -----------------------------------------------------------

@dataclass(frozen=True)
class CyclePartition:
    """A partition of ``{1..k}`` into cyclically ordered parts of size >= 2."""

    k: int
    parts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k <= 0 or self.k % 2:
            raise ValueError(f"k must be a positive even integer, got {self.k}")
        flat = [x for p in self.parts for x in p]
        if sorted(flat) != list(range(1, self.k + 1)):
            raise ValueError("parts must partition {1..k}")
        if any(len(p) < 2 for p in self.parts):
            raise ValueError("every part needs at least 2 elements")


def part_weight(part) -> int:
    """Sum of |a-b| over cyclically adjacent pairs; a 2-element part counts its pair twice."""
    t = len(part)
    return sum(abs(part[i] - part[(i + 1) % t]) for i in range(t))


def cycle_partition_weight(p: CyclePartition) -> int:
    return sum(part_weight(part) for part in p.parts)


def _cyclic_orders(block):
    """Cyclic orders of ``block`` up to rotation and reflection, min element first."""
    first, rest = block[0], block[1:]
    if len(rest) <= 1:
        yield (first, *rest)
        return
    for perm in permutations(rest):
        if perm[0] < perm[-1]:
            yield (first, *perm)


def enumerate_cycle_partitions(k: int):
    def rec(remaining):
        if not remaining:
            yield ()
            return
        head, others = remaining[0], remaining[1:]
        for size in range(1, len(others) + 1):
            for mates in combinations(others, size):
                block = (head, *mates)
                rest = tuple(x for x in others if x not in mates)
                if len(rest) == 1:
                    continue
                for order in _cyclic_orders(block):
                    for tail in rec(rest):
                        yield (order, *tail)

    for parts in rec(tuple(range(1, k + 1))):
        yield CyclePartition(k, parts)


MAX_PARTITION_K = 10


def max_partition_weight(k: int) -> int:
    if k <= 0 or k % 2:
        raise ValueError(f"k must be a positive even integer, got {k}")
    if k > MAX_PARTITION_K:
        raise ValueError(f"brute force limited to k <= {MAX_PARTITION_K}")
    return max(cycle_partition_weight(p) for p in enumerate_cycle_partitions(k))


# 2-factor types and their symmetries ----------------------------------------

def enumerate_two_factor_types(n: int) -> list[tuple[int, ...]]:
    """Multisets of integers >= 3 summing to n, each non-increasing."""
    if n < 3:
        raise ValueError("n must be >= 3")
    out = []

    def rec(left, cap, acc):
        if left == 0:
            out.append(tuple(acc))
            return
        for part in range(min(left, cap), 2, -1):
            if left - part == 0 or left - part >= 3:
                rec(left - part, part, acc + [part])

    rec(n, n, [])
    return out


def factor_layout(cycle_type) -> list[tuple[int, ...]]:
    cycles, start = [], 0
    for c in cycle_type:
        cycles.append(tuple(range(start, start + c)))
        start += c
    return cycles


def automorphism_count(cycle_type) -> int:
    count = 1
    for c in cycle_type:
        count *= 2 * c
    for c in set(cycle_type):
        for i in range(2, cycle_type.count(c) + 1):
            count *= i
    return count


def factor_automorphisms(cycle_type):
    """All automorphisms of the laid-out 2-factor as permutation lists."""
    cycles = factor_layout(cycle_type)
    n = sum(cycle_type)
    per_cycle = []
    for cyc in cycles:
        c = len(cyc)
        maps = []
        for r in range(c):
            maps.append([(i + r) % c for i in range(c)])
            maps.append([(r - i) % c for i in range(c)])
        per_cycle.append(maps)
    # Permutations of equal-length cycles among themselves.
    groups: dict[int, list[int]] = {}
    for idx, c in enumerate(cycle_type):
        groups.setdefault(c, []).append(idx)
    block_perms = []
    for c, idxs in groups.items():
        block_perms.append([(idxs, p) for p in permutations(idxs)])
    for choice in product(*block_perms):
        target = list(range(len(cycles)))
        for idxs, p in choice:
            for a, b in zip(idxs, p):
                target[a] = b
        for dihedral in product(*per_cycle):
            sigma = [0] * n
            for ci, cyc in enumerate(cycles):
                dest = cycles[target[ci]]
                m = dihedral[ci]
                for i, v in enumerate(cyc):
                    sigma[v] = dest[m[i]]
            yield sigma


def first_partner_candidates(cycle_type) -> list[int]:
    """Partners of vertex 0, one per orbit of the stabiliser of vertex 0."""
    cycles = factor_layout(cycle_type)
    c0 = cycle_type[0]
    cands = list(range(2, c0 // 2 + 1))
    seen = set()
    for cyc in cycles[1:]:
        if len(cyc) not in seen:
            seen.add(len(cyc))
            cands.append(cyc[0])
    return cands


def _is_lex_min(mate, autos) -> bool:
    n = len(mate)
    for sigma, inv in autos:
        for i in range(n):
            img = sigma[mate[inv[i]]]
            if img != mate[i]:
                if img < mate[i]:
                    return False
                break
    return True


def _factor_neighbours(cycle_type) -> list[set[int]]:
    n = sum(cycle_type)
    nb = [set() for _ in range(n)]
    for cyc in factor_layout(cycle_type):
        c = len(cyc)
        for i, v in enumerate(cyc):
            nb[v].add(cyc[(i + 1) % c])
            nb[v].add(cyc[(i - 1) % c])
    return nb


def perfect_matchings(n: int, forbidden, first_partner: int | None = None):
    """Partner arrays of perfect matchings avoiding ``forbidden[v]``.

    The smallest unmatched vertex is paired first, partners in increasing order.
    """
    mate = [-1] * n

    def rec():
        try:
            v = mate.index(-1)
        except ValueError:
            yield list(mate)
            return
        for w in range(v + 1, n):
            if mate[w] >= 0 or w in forbidden[v]:
                continue
            if v == 0 and first_partner is not None and w != first_partner:
                continue
            mate[v], mate[w] = w, v
            yield from rec()
            mate[v] = mate[w] = -1

    yield from rec()


def _connected(cycle_type, mate) -> bool:
    owner = []
    for ci, c in enumerate(cycle_type):
        owner.extend([ci] * c)
    parent = list(range(len(cycle_type)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for v, w in enumerate(mate):
        a, b = find(owner[v]), find(owner[w])
        if a != b:
            parent[a] = b
    return len({find(i) for i in range(len(cycle_type))}) == 1


def decomposition_from_mate(cycle_type, mate) -> DecomposedGraph:
    chords = [(v, w) for v, w in enumerate(mate) if v < w]
    return DecomposedGraph.from_parts(sum(cycle_type), factor_layout(cycle_type), chords)


# exhaustive search ----------------------------------------------------------

@dataclass
class SearchOptions:
    prune: str = "full"          # "full", "first" (first-chord rule only) or "none"
    max_group: int = 20_000      # full orbit check only below this group size
    threads: int = 1
    checkpoint: str | Path | None = None
    max_n: int = 14
    require_connected: bool = True


@dataclass
class SearchResult:
    n: int
    k: int
    gamma: int
    witness: DecomposedGraph
    decompositions_examined: int
    elapsed: float

    def summary(self) -> str:
        return (f"gamma_{self.k}({self.n}) = {self.gamma}  "
                f"[{self.decompositions_examined} decompositions, {self.elapsed:.2f}s, "
                f"connected simple cubic graphs]")


class SearchInterrupted(RuntimeError):
    pass


@dataclass
class _UnitResult:
    unit: tuple
    examined: int
    best: list[int] = field(default_factory=list)
    witness: list[str] = field(default_factory=list)


def _run_unit(cycle_type, first, k_max, prune, max_group, require_connected) -> _UnitResult:
    n = sum(cycle_type)
    forbidden = _factor_neighbours(cycle_type)
    autos = None
    if prune == "full" and automorphism_count(cycle_type) <= max_group:
        autos = []
        for sigma in factor_automorphisms(cycle_type):
            inv = [0] * n
            for i, s in enumerate(sigma):
                inv[s] = i
            autos.append((sigma, inv))
    res = _UnitResult((tuple(cycle_type), first), 0, [-1] * (k_max + 1), [""] * (k_max + 1))
    for mate in perfect_matchings(n, forbidden, first):
        if require_connected and not _connected(cycle_type, mate):
            continue
        if autos is not None and not _is_lex_min(mate, autos):
            continue
        dg = decomposition_from_mate(cycle_type, mate)
        res.examined += 1
        lengths = [r.length for r in min_chord_cycle_all_k(dg, k_max, check=False)]
        text = None
        for k, val in enumerate(lengths):
            if val > res.best[k]:
                text = text or serialize_decomp(dg)
                res.best[k], res.witness[k] = val, text
            elif val == res.best[k]:
                text = text or serialize_decomp(dg)
                if text < res.witness[k]:
                    res.witness[k] = text
    return res


def _units(n: int, prune: str):
    for ct in enumerate_two_factor_types(n):
        if prune == "none":
            yield ct, None
        else:
            for p in first_partner_candidates(ct):
                yield ct, p


def _checkpoint_header(n, k_max, opts) -> str:
    return (f"# chordgirth search checkpoint\n"
            f"# n={n} k_max={k_max} prune={opts.prune} max_group={opts.max_group} "
            f"connected={int(opts.require_connected)} version={__version__}\n")


def _load_checkpoint(path: Path, header: str) -> dict:
    done = {}
    if not path.exists():
        return done
    text = path.read_text()
    if not text.startswith(header):
        raise ValueError(f"checkpoint {path} was written for different search parameters")
    for line in text[len(header):].splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        rec = json.loads(line)
        unit = (tuple(rec["unit"][0]), rec["unit"][1])
        done[unit] = _UnitResult(unit, rec["examined"], rec["best"], rec["witness"])
    return done


def exhaustive_gamma_table(n: int, k_max: int, options: SearchOptions | None = None) -> list[SearchResult]:
    """gamma_k(n) for every k in 0..k_max from one enumeration."""
    opts = options or SearchOptions()
    if n % 2 or n < 4:
        raise ValueError(f"n must be even and >= 4, got {n}")
    if n > opts.max_n:
        raise ValueError(f"n={n} exceeds the search limit {opts.max_n} (raise max_n to override)")
    if k_max < 0:
        raise ValueError("k must be >= 0")
    if opts.prune not in ("full", "first", "none"):
        raise ValueError(f"unknown prune mode {opts.prune!r}")
    t0 = time.perf_counter()
    header = _checkpoint_header(n, k_max, opts)
    ckpt = Path(opts.checkpoint) if opts.checkpoint else None
    done = _load_checkpoint(ckpt, header) if ckpt else {}
    if ckpt and not ckpt.exists():
        ckpt.write_text(header)

    todo = [u for u in _units(n, opts.prune) if u not in done]
    results = list(done.values())

    def record(r: _UnitResult):
        results.append(r)
        if ckpt:
            with ckpt.open("a") as fh:
                fh.write(json.dumps({"unit": [list(r.unit[0]), r.unit[1]], "examined": r.examined,
                                     "best": r.best, "witness": r.witness}) + "\n")

    args = [(ct, p, k_max, opts.prune, opts.max_group, opts.require_connected) for ct, p in todo]
    try:
        if opts.threads > 1 and len(args) > 1:
            with ProcessPoolExecutor(max_workers=opts.threads) as pool:
                for r in pool.map(_run_unit, *zip(*args)):
                    record(r)
        else:
            for a in args:
                record(_run_unit(*a))
    except KeyboardInterrupt:
        raise SearchInterrupted(f"interrupted; progress saved to {ckpt}" if ckpt else "interrupted") from None

    from .io import parse_decomp

    examined = sum(r.examined for r in results)
    out = []
    for k in range(k_max + 1):
        best, text = -1, ""
        for r in results:
            if r.best[k] > best or (r.best[k] == best and r.witness[k] < text):
                best, text = r.best[k], r.witness[k]
        if best < 0:
            raise ValueError(f"no connected decomposition exists for n={n}")
        out.append(SearchResult(n, k, best, parse_decomp(text), examined, time.perf_counter() - t0))
    return out


def exhaustive_gamma(n: int, k: int, options: SearchOptions | None = None) -> SearchResult:
    return exhaustive_gamma_table(n, k, options)[k]
