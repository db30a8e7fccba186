"""Short cycles with few chords in cubic and d-regular graphs."""

__version__ = "0.1.0"

from .graph import (  # noqa: E402
    NO_CYCLE,
    DecomposedGraph,
    Graph,
    find_bridges,
    girth,
    is_connected,
    is_isomorphic,
    validate,
)
from .io import parse_decomp, parse_graph6, serialize_decomp, write_graph6  # noqa: E402
from .solver import ChordCycleResult, min_chord_cycle, min_chord_cycle_all_k, oracle_min_chord_cycle  # noqa: E402
