"""DECOMP text format, graph6, and the bundled data files.

DECOMP is line oriented::

    # comment
    n 14
    factor 0 1 2 3 4 5 6 7 8 9 10 11 12 13
    chord 0 5
    ...
"""

from __future__ import annotations

import os
from importlib import resources
from pathlib import Path

from .graph import DecomposedGraph, Graph, GraphError, validate

DATA_ENV = "CHORDGIRTH_DATA"


class FormatError(ValueError):
    """Malformed input text; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InvalidDecomposition(ValueError):
    def __init__(self, problems: list[str]):
        self.problems = problems
        super().__init__("invalid decomposition: " + "; ".join(problems))


def _ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", lineno) from None


def _check_range(vs, n, lineno):
    for v in vs:
        if not 0 <= v < n:
            raise FormatError(f"vertex {v} outside 0..{n - 1}", lineno)


def parse_decomp(text: str) -> DecomposedGraph:
    n = None
    cycles: list[list[int]] = []
    chords: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *rest = line.split()
        if n is None and key != "n":
            raise FormatError("first non-comment line must be 'n <int>'", lineno)
        if key == "n":
            if n is not None:
                raise FormatError("'n' declared twice", lineno)
            vals = _ints(rest, lineno)
            if len(vals) != 1 or vals[0] < 0:
                raise FormatError("'n' takes one non-negative integer", lineno)
            n = vals[0]
        elif key == "factor":
            cyc = _ints(rest, lineno)
            if len(cyc) < 3:
                raise FormatError(f"factor cycle of length {len(cyc)}; cycle length >= 3 required", lineno)
            _check_range(cyc, n, lineno)
            cycles.append(cyc)
        elif key == "chord":
            pair = _ints(rest, lineno)
            if len(pair) != 2:
                raise FormatError("'chord' takes two vertices", lineno)
            if pair[0] == pair[1]:
                raise FormatError(f"chord {{{pair[0]},{pair[1]}}} is a self-loop", lineno)
            _check_range(pair, n, lineno)
            chords.append((pair[0], pair[1]))
        else:
            raise FormatError(f"unknown directive {key!r}", lineno)
    if n is None:
        raise FormatError("missing 'n' line")
    if len(set(map(frozenset, chords))) != len(chords):
        raise InvalidDecomposition(["duplicate chord"])
    try:
        dg = DecomposedGraph.from_parts(n, cycles, chords)
    except GraphError as exc:
        raise InvalidDecomposition([str(exc)]) from None
    problems = validate(dg)
    if problems:
        raise InvalidDecomposition(problems)
    return dg


def serialize_decomp(dg: DecomposedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {dg.n}")
    for c in dg.factor_cycles:
        lines.append("factor " + " ".join(map(str, c)))
    for u, v in sorted(dg.chords):
        lines.append(f"chord {u} {v}")
    return "\n".join(lines) + "\n"


# graph6 ---------------------------------------------------------------------

def _encode_n(n: int) -> bytes:
    if n < 63:
        return bytes([n + 63])
    if n < 258048:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n < 68719476736:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("graph too large for graph6")


def write_graph6(g: Graph) -> bytes:
    out = bytearray(_encode_n(g.n))
    adj = [set(a) for a in g.adj]
    bits = [1 if i in adj[j] else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out)


def parse_graph6(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise FormatError("empty graph6 string")
    if any(b < 63 or b > 126 for b in data):
        raise FormatError("graph6 byte outside 63..126")
    if data[0] != 126:
        n, body = data[0] - 63, data[1:]
    elif len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise FormatError("truncated graph6 size header")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        body = data[8:]
    else:
        if len(data) < 4:
            raise FormatError("truncated graph6 size header")
        n = 0
        for b in data[1:4]:
            n = (n << 6) | (b - 63)
        body = data[4:]
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("graph6 padding bits are not zero")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def read_graph6_file(path) -> list[Graph]:
    text = Path(path).read_bytes()
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


# bundled data ---------------------------------------------------------------

def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("chordgirth") / "data"))


def load_named(name: str) -> Graph:
    """One of the bundled graphs: ``heawood``, ``petersen``, ``tutte_coxeter``."""
    return read_graph6_file(data_dir() / f"{name}.g6")[0]


def load_named_decomp(name: str) -> DecomposedGraph:
    return parse_decomp((data_dir() / f"{name}.decomp").read_text())
