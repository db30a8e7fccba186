"""Chord-restricted girth of the explicit families next to the bound formulas.

    python3 scripts/constructions_vs_bounds.py --l-max 6
"""

import argparse
import math

from chordgirth.bounds import gamma_bounds
from chordgirth.constructions import blow_up, construct_gamma2, construct_gamma3, projective_plane_incidence
from chordgirth.solver import min_chord_cycle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--l-max", type=int, default=6)
    args = ap.parse_args()

    print("family     l     n   k  length  lower  upper")
    for l in range(1, args.l_max + 1):
        for name, build, k in (("gamma2", construct_gamma2, 2), ("gamma3", construct_gamma3, 3)):
            dg = build(l)
            rep = gamma_bounds(k, dg.n)
            length = min_chord_cycle(dg, k).length
            print(f"{name:<9s} {l:>2d} {dg.n:>5d}  {k}  {length:>6d}  {rep.assertable_lower():>5}  {rep.assertable_upper():>5}")

    print("\nblow-ups of PG(2,q) incidence graphs at k = q+1")
    for q in (2, 3, 5, 7):
        dg = blow_up(projective_plane_incidence(q))
        k = q + 1
        length = min_chord_cycle(dg, k).length
        print(f"q={q}  n={dg.n:<5d} k={k}  length={length}  (2n)^(1/3)={(2 * dg.n) ** (1 / 3):.2f}"
              f"  sqrt(2n)={math.sqrt(2 * dg.n):.2f}")


if __name__ == "__main__":
    main()
