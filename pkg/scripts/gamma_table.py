"""Exhaustive gamma_k(n) table for small n, checked against the bound report.

    python3 scripts/gamma_table.py --n-max 12 --k-max 6
"""

import argparse
import time

from chordgirth.bounds import gamma_bounds
from chordgirth.search import SearchOptions, exhaustive_gamma_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=12)
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    opts = SearchOptions(threads=args.threads, max_n=max(14, args.n_max))
    print("n   " + " ".join(f"k={k:<3d}" for k in range(args.k_max + 1)) + "  examined  time")
    for n in range(4, args.n_max + 1, 2):
        t0 = time.perf_counter()
        rows = exhaustive_gamma_table(n, args.k_max, opts)
        flags = []
        for r in rows:
            rep = gamma_bounds(r.k, n)
            lo, hi = rep.assertable_lower(), rep.assertable_upper()
            bad = (lo is not None and r.gamma < lo) or (hi is not None and r.gamma > hi)
            flags.append(f"{r.gamma:<3d}{'!' if bad else ' '}  ")
        print(f"{n:<3d} " + "".join(flags) + f"{rows[0].decompositions_examined:>8d}  {time.perf_counter() - t0:.1f}s")
    print("'!' marks a value outside the assertable bounds")


if __name__ == "__main__":
    main()
