"""Regenerate the bundled graph6 files and the Tutte-Coxeter decomposition.

Heawood and Tutte-Coxeter come from their LCF notations [5,-5]^7 and
[-13,-9,7,-7,9,13]^5; Petersen is the outer 5-cycle, inner pentagram and
spokes. Each graph is checked against its defining invariants before writing.
"""

from pathlib import Path

from chordgirth.decompose import petersen_decompose
from chordgirth.graph import Graph, girth
from chordgirth.io import serialize_decomp, write_graph6

DATA = Path(__file__).resolve().parents[1] / "src" / "chordgirth" / "data"


def lcf(n, shifts, repeats):
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    steps = shifts * repeats
    for i in range(n):
        edges.add(tuple(sorted((i, (i + steps[i]) % n))))
    return Graph(n, edges)


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def main():
    graphs = {
        "heawood": (lcf(14, [5, -5], 7), 14, 6),
        "petersen": (petersen(), 10, 5),
        "tutte_coxeter": (lcf(30, [-13, -9, 7, -7, 9, 13], 5), 30, 8),
    }
    for name, (g, n, gi) in graphs.items():
        assert g.n == n and g.is_regular(3) and girth(g) == gi, name
        (DATA / f"{name}.g6").write_bytes(write_graph6(g) + b"\n")
        print(name, write_graph6(g).decode())
    dg = petersen_decompose(graphs["tutte_coxeter"][0])
    (DATA / "tutte_coxeter.decomp").write_text(
        serialize_decomp(dg, "Tutte-Coxeter graph, Petersen decomposition from chordgirth.decompose"))


if __name__ == "__main__":
    main()
