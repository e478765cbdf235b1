"""Hypergraph dismantling with higher-order collective influence."""

from ._core import (
    Hypergraph,
    HyperciError,
    __version__,
    compare,
    dismantle,
    dismantle_csv,
    dismantle_json,
    l_sweep,
    rank,
    scores,
)

__all__ = [
    "Hypergraph",
    "HyperciError",
    "__version__",
    "compare",
    "dismantle",
    "dismantle_csv",
    "dismantle_json",
    "l_sweep",
    "rank",
    "scores",
]
