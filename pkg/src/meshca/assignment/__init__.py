"""Channel-assignment algorithms and the passes they share."""

from __future__ import annotations

from ..conflict import ConflictGraph
from ..metrics import TidState
from ..topology import WmnGraph
from .baselines import bfs_ca, mais_ca, uniform_ca
from .common import CaTrace, RcoCommit, map_radios
from .eizm import LevelStructure, eizm_ca, eiz_sequence, level_structure
from .oracle import brute_force_optimal
from .ois import ois_ca
from .partition import IsPartition, partition_independent_sets
from .repair import rco, topology_restore

ALGORITHMS = ("ois", "eizm", "mais", "bfs-lite", "brute", "uniform")


def run_algorithm(name: str, g: WmnGraph, cg: ConflictGraph, channel_count: int, seed: int = 0) -> CaTrace:
    """Dispatch by CLI algorithm name."""
    if name == "ois":
        return ois_ca(g, cg, channel_count, seed=seed)
    if name == "eizm":
        return eizm_ca(g, cg, channel_count, seed=seed)
    if name == "mais":
        return mais_ca(g, cg, channel_count, seed=seed)
    if name == "bfs-lite":
        return bfs_ca(g, cg, channel_count, seed=seed)
    if name == "uniform":
        return uniform_ca(g, cg, channel_count, seed=seed)
    if name == "brute":
        ca = brute_force_optimal(g, cg, channel_count)
        t = TidState(cg, ca).tid
        return CaTrace("brute-force", ca, ca, ca, (t, t, t), seed=seed)
    raise ValueError(f"unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}")


__all__ = [
    "ALGORITHMS",
    "CaTrace",
    "IsPartition",
    "LevelStructure",
    "RcoCommit",
    "bfs_ca",
    "brute_force_optimal",
    "eiz_sequence",
    "eizm_ca",
    "level_structure",
    "mais_ca",
    "map_radios",
    "ois_ca",
    "partition_independent_sets",
    "rco",
    "run_algorithm",
    "topology_restore",
    "uniform_ca",
]
