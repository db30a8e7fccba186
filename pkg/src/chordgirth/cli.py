"""Command-line interface: ``chordgirth <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O or format error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bounds as bnd
from .constructions import (
    blow_up,
    construct_gamma2,
    construct_gamma3,
    projective_plane_incidence,
    random_decomposed_regular,
)
from .decompose import DecompositionError, eliminate_bridges, petersen_decompose
from .graph import DecomposedGraph, Graph
from .io import FormatError, InvalidDecomposition, data_dir, parse_decomp, parse_graph6, serialize_decomp, write_graph6
from .solver import min_chord_cycle_all_k

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    if not os.path.exists(path) and (data_dir() / path).exists():
        path = str(data_dir() / path)
    with open(path, "rb") as fh:
        return fh.read()


def _write(data: str | bytes, path: str | None) -> None:
    if isinstance(data, str):
        data = data.encode()
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _looks_like_decomp(raw: bytes) -> bool:
    for line in raw.decode("utf-8", "replace").splitlines():
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        return s.startswith("n ") or s == "n"
    return False


def load_graph(path: str) -> Graph:
    raw = _read(path)
    if _looks_like_decomp(raw):
        return parse_decomp(raw.decode()).graph
    return parse_graph6(raw.splitlines()[0] if raw.strip() else raw)


def load_decomposed(path: str) -> DecomposedGraph:
    """DECOMP text as is; graph6 input gets a Petersen decomposition."""
    raw = _read(path)
    if _looks_like_decomp(raw):
        return parse_decomp(raw.decode())
    return petersen_decompose(parse_graph6(raw.splitlines()[0] if raw.strip() else raw))


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "gamma2":
        out = serialize_decomp(construct_gamma2(args.l), f"gamma2 construction, l={args.l}")
    elif kind == "gamma3":
        out = serialize_decomp(construct_gamma3(args.l), f"gamma3 construction, l={args.l}")
    elif kind == "blowup":
        out = serialize_decomp(blow_up(load_graph(args.base)), f"blow-up of {args.base}")
    elif kind == "pg":
        out = write_graph6(projective_plane_incidence(args.q)) + b"\n"
    else:
        dg = random_decomposed_regular(args.n, args.d, args.seed)
        out = serialize_decomp(dg, f"random n={args.n} d={args.d} seed={args.seed}")
    _write(out, args.output)
    return EXIT_OK


def cmd_solve(args) -> int:
    dg = load_decomposed(args.input)
    t0 = time.perf_counter()
    results = min_chord_cycle_all_k(dg, args.k)
    elapsed_ms = (time.perf_counter() - t0) * 1000
    if not args.all_k:
        results = results[-1:]
    if args.json:
        rows = [{"n": dg.n, "k": r.budget, "length": r.length, "witness": list(r.witness),
                 "chords_used": r.chords_used, "elapsed_ms": round(elapsed_ms, 3)} for r in results]
        print(json.dumps(rows if args.all_k else rows[0]))
    else:
        for r in results:
            print(f"k={r.budget} length={r.length} chords={r.chords_used} "
                  f"witness={' '.join(map(str, r.witness))}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    g = load_graph(args.input)
    _write(serialize_decomp(petersen_decompose(g), "Petersen decomposition"), args.output)
    return EXIT_OK


def cmd_fix_bridges(args) -> int:
    g = eliminate_bridges(load_graph(args.input))
    _write(write_graph6(g) + b"\n", args.output)
    return EXIT_OK


def cmd_search(args) -> int:
    from .search import SearchOptions, exhaustive_gamma_table

    opts = SearchOptions(prune=args.prune, threads=args.threads or (os.cpu_count() or 1),
                         checkpoint=args.checkpoint, max_n=args.max_n)
    res = exhaustive_gamma_table(args.n, args.k, opts)[args.k]
    print(res.summary())
    path = args.witness or f"gamma{args.k}_n{args.n}.decomp"
    _write(serialize_decomp(res.witness, res.summary()), path)
    print(f"witness written to {path}")
    return EXIT_OK


def cmd_bounds(args) -> int:
    rep = bnd.gamma_bounds(args.k, args.n)
    extra = {}
    if args.d is not None and args.g is not None:
        extra["moore_bound"] = bnd.moore_bound(args.d, args.g)
    if args.d is not None and args.k == 2:
        extra["d_regular_gamma2_upper"] = bnd.d_regular_gamma2_upper(args.d, args.n)
    if args.json:
        print(json.dumps({**rep.as_dict(), **extra}))
        return EXIT_OK
    print(bnd.format_report(rep))
    if "moore_bound" in extra:
        print(f"moore  n >= {extra['moore_bound']} for d={args.d}, g={args.g}")
    if "d_regular_gamma2_upper" in extra:
        print(f"upper  sqrt(2n/(d-2)) = {extra['d_regular_gamma2_upper']:.2f}   d={args.d}-regular, k=2")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .acceptance import run_all

    checks = run_all(print)
    failed = [c for c in checks if not c.passed]
    print(f"{len(checks) - len(failed)}/{len(checks)} claims verified")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="chordgirth", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an extremal or random instance")
    csub = c.add_subparsers(dest="kind", required=True)
    for name in ("gamma2", "gamma3"):
        s = csub.add_parser(name)
        s.add_argument("--l", type=int, required=True)
    s = csub.add_parser("blowup")
    s.add_argument("--base", required=True, help="graph6 or DECOMP file of a regular graph")
    s = csub.add_parser("pg")
    s.add_argument("--q", type=int, required=True)
    s = csub.add_parser("random")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    for s in csub.choices.values():
        s.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    s = sub.add_parser("solve", help="shortest cycle with at most k chords")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--all-k", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("decompose", help="Petersen decomposition of a bridgeless cubic graph")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("fix-bridges", help="rewire a cubic graph until it is bridgeless")
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_fix_bridges)

    s = sub.add_parser("search", help="exhaustive gamma_k(n)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--checkpoint")
    s.add_argument("--threads", type=int, default=None)
    s.add_argument("--prune", choices=("full", "first", "none"), default="full")
    s.add_argument("--max-n", type=int, default=14)
    s.add_argument("--witness", help="where to write the witness DECOMP file")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("bounds", help="evaluate the bound formulas")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--g", type=int)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("verify", help="run the reproduction checks")
    s.add_argument("--suite", choices=("paper",), default="paper")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (FormatError, InvalidDecomposition, DecompositionError, OSError, UnicodeDecodeError) as exc:
        print(f"chordgirth: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"chordgirth: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
