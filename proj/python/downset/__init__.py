"""Downward-closed sets of natural vectors represented by antichains."""

from ._core import (
    Antichain,
    Error,
    OpStats,
    backends,
    bench_csv,
    choose_backend,
    compare,
    conjecture,
    count_2d,
    count_antichains,
    intersect,
    layer_size,
    meet,
    member,
    random_antichain,
    solve_parity,
    union,
    width,
    zielonka,
)

__all__ = [
    "Antichain",
    "Error",
    "OpStats",
    "backends",
    "bench_csv",
    "choose_backend",
    "compare",
    "conjecture",
    "count_2d",
    "count_antichains",
    "intersect",
    "layer_size",
    "meet",
    "member",
    "random_antichain",
    "solve_parity",
    "union",
    "width",
    "zielonka",
]
