"""Reproduction checks for the published claims, runnable from tests or the CLI.

Every check returns a :class:`Check`; its time limit is part of the verdict.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

from .bounds import moore_bound
from .constructions import (
    blow_up,
    construct_gamma2,
    construct_gamma3,
    projective_plane_incidence,
    random_bridged_cubic,
    random_cubic,
    random_decomposed_regular,
)
from .decompose import eliminate_bridges, petersen_decompose
from .graph import Graph, find_bridges, girth, is_connected, is_isomorphic, validate
from .io import load_named
from .search import exhaustive_gamma_table
from .solver import min_chord_cycle, min_chord_cycle_all_k, oracle_min_chord_cycle_all_k, witness_problems


@dataclass
class Check:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    limit: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}: {self.detail} ({self.elapsed:.2f}s / {self.limit:g}s)"


def _k4() -> Graph:
    return Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def heawood_identification():
    dg = construct_gamma2(1)
    g = dg.graph
    res = min_chord_cycle(dg, 2)
    ok = g.n == 14 and girth(g) == 6 and is_isomorphic(g, load_named("heawood")) and res.length == 6
    return ok, f"n={g.n} girth={girth(g)} k=2 length={res.length}"


def gamma2_values():
    got = {l: min_chord_cycle(construct_gamma2(l), 2).length for l in (1, 2, 3)}
    return all(v == 4 * l + 2 for l, v in got.items()), f"lengths {got}"


def gamma3_values():
    ok, parts = True, []
    for l in (1, 2, 3):
        dg = construct_gamma3(l)
        res = min_chord_cycle_all_k(dg, 4)
        ok &= res[3].length == res[2].length == 2 * l + 2
        ok &= all(r.chords_used % 2 == 0 and not witness_problems(dg, r) for r in res)
        parts.append(f"l={l}: k=2 {res[2].length}, k=3 {res[3].length}")
    return ok, "; ".join(parts)


def blow_up_values():
    cases = [("petersen", load_named("petersen"), 60, 4), ("K4", _k4(), 24, 2),
             ("heawood", load_named("heawood"), 84, 5)]
    ok, parts = True, []
    for name, h, n, k in cases:
        dg = blow_up(h)
        res = min_chord_cycle(dg, k)
        ok &= dg.n == n and res.length == 6 and not validate(dg)
        parts.append(f"{name}: n={dg.n} k={k} length={res.length}")
    return ok, "; ".join(parts)


def _common_neighbourhoods_ok(g: Graph) -> bool:
    adj = [set(a) for a in g.adj]
    return all(len(adj[u] & adj[v]) <= 1 for u in range(g.n) for v in range(u + 1, g.n))


def projective_planes():
    ok = is_isomorphic(projective_plane_incidence(2), load_named("heawood"))
    parts = [f"q=2 Heawood={ok}"]
    for q in (3, 5):
        g = projective_plane_incidence(q)
        good = (g.n == 2 * (q * q + q + 1) and g.is_regular(q + 1) and girth(g) == 6
                and _common_neighbourhoods_ok(g))
        ok &= good
        parts.append(f"q={q}: n={g.n} girth={girth(g)} ok={good}")
    return ok, "; ".join(parts)


def exhaustive_tables():
    ok, parts = True, []
    for n in (6, 8, 10):
        vals = [r.gamma for r in exhaustive_gamma_table(n, 4)]
        ok &= vals[0] == n and vals[1] == n // 2 + 1
        ok &= all(vals[k + 1] <= vals[k] for k in range(4))
        parts.append(f"n={n}: {vals}")
    return ok, "gamma_0..4 " + "; ".join(parts)


def solver_oracle_equivalence(count: int = 200):
    bad = 0
    for seed in range(count):
        n = 4 + 2 * (seed % 7)
        dg = random_decomposed_regular(n, 3, seed)
        fast = min_chord_cycle_all_k(dg, 5)
        slow = oracle_min_chord_cycle_all_k(dg, 5)
        for a, b in zip(fast, slow):
            if a.length != b.length or witness_problems(dg, a) or witness_problems(dg, b):
                bad += 1
    return bad == 0, f"{count} graphs (n=4..16), k=0..5, mismatches={bad}"


def upper_bound_property():
    viol = []
    for seed in range(100):
        n = 20 + 2 * ((seed * 37) % 91)
        dg = random_decomposed_regular(n, 3, seed)
        length = min_chord_cycle(dg, 2).length
        if length > math.sqrt(2 * n) + 2:
            viol.append(("cubic", n, seed, length))
    checked = 100
    for d in (4, 5):
        for seed in range(25):
            n = 2 * (3 + (seed * 11) % 58)
            if n < d + 1:
                continue
            dg = random_decomposed_regular(n, d, 1000 * d + seed)
            length = min_chord_cycle(dg, 2).length
            checked += 1
            if length > math.sqrt(2 * n / (d - 2)) + 1:
                viol.append((f"d={d}", n, seed, length))
    return not viol, f"{checked} instances, violations={viol[:5]}"


def partition_tightness():
    from .search import max_partition_weight
    got = {k: max_partition_weight(k) for k in (2, 4, 6, 8)}
    return all(v == k * k // 2 for k, v in got.items()), f"max weights {got}"


def decomposition_and_rewiring():
    graphs = [load_named("petersen"), load_named("heawood"), load_named("tutte_coxeter")]
    graphs += [random_cubic(10 + 2 * (s % 20), 500 + s) for s in range(50)]
    dec_ok = all(not validate(petersen_decompose(g)) for g in graphs)
    rew_ok = True
    for seed in range(20):
        g = random_bridged_cubic(2 + seed % 3, seed)
        out = eliminate_bridges(g)
        rew_ok &= (out.is_regular(3) and is_connected(out) and not find_bridges(out)
                   and girth(out) >= girth(g))
    return dec_ok and rew_ok, f"{len(graphs)} decompositions ok={dec_ok}; 20 rewirings ok={rew_ok}"


def moore_bounds():
    vals = (moore_bound(3, 5), moore_bound(3, 6), moore_bound(3, 8))
    tc = girth(load_named("tutte_coxeter"))
    return vals == (10, 14, 30) and tc == 8, f"moore(3,5/6/8)={vals}, girth(Tutte-Coxeter)={tc}"


CRITERIA: list[tuple[int, str, Callable, float]] = [
    (1, "Heawood identification", heawood_identification, 1),
    (2, "gamma_2 construction values", gamma2_values, 5),
    (3, "gamma_3 construction values", gamma3_values, 5),
    (4, "blow-up values", blow_up_values, 10),
    (5, "projective planes", projective_planes, 5),
    (6, "exhaustive gamma tables", exhaustive_tables, 120),
    (7, "solver-oracle equivalence", solver_oracle_equivalence, 120),
    (8, "upper-bound property", upper_bound_property, 120),
    (9, "partition weight tightness", partition_tightness, 60),
    (10, "decomposition and rewiring", decomposition_and_rewiring, 60),
    (11, "Moore bounds", moore_bounds, 1),
]


def run_check(number: int) -> Check:
    num, name, fn, limit = next(c for c in CRITERIA if c[0] == number)
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed claim, not a crashed report
        ok, detail = False, f"error: {exc!r}"
    elapsed = time.perf_counter() - t0
    if elapsed > limit:
        ok, detail = False, detail + f"; exceeded time limit {limit}s"
    return Check(num, name, bool(ok), detail, elapsed, limit)


def run_all(echo: Callable[[str], None] | None = None) -> list[Check]:
    out = []
    for num, *_ in CRITERIA:
        c = run_check(num)
        if echo:
            echo(c.line())
        out.append(c)
    return out
