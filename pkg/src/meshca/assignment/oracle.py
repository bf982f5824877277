"""Exhaustive minimum-TID assignment for tiny meshes."""

from __future__ import annotations

import numpy as np

from ..channels import ChannelAssignment
from ..conflict import ConflictGraph
from ..errors import BudgetExceededError, PreconditionError
from ..topology import WmnGraph

DEFAULT_BUDGET = 3**12
CHUNK = 1 << 16


def _digits(start: int, stop: int, base: int, width: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the base-``base`` counting table, MSB first."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, width), dtype=np.int8)
    for col in range(width - 1, -1, -1):
        out[:, col] = idx % base
        idx //= base
    return out + 1


def brute_force_optimal(
    g: WmnGraph,
    cg: ConflictGraph,
    channel_count: int,
    budget: int = DEFAULT_BUDGET,
) -> ChannelAssignment:
    """Topology-preserving assignment of minimum TID.

    Assignments are enumerated in lexicographic order of the flat radio list
    (node 0 radio 0 first), so ties resolve to the lexicographically smallest.
    """
    total = g.total_radios
    space = channel_count**total
    if space > budget:
        raise BudgetExceededError(f"{channel_count}^{total} = {space} assignments exceeds budget {budget}")

    ra = np.asarray(cg.radio_a)
    rb = np.asarray(cg.radio_b)
    edges = np.asarray(sorted(cg.edges), dtype=np.int64).reshape(-1, 2)
    offsets = cg.radio_offsets
    counts = g.radio_counts
    # For each WMN edge, every (radio of i, radio of j) pair.
    topo_pairs = [
        np.asarray(
            [(offsets[i] + a, offsets[j] + b) for a in range(counts[i]) for b in range(counts[j])]
        )
        for i, j in g.sorted_edges
    ]

    best_tid, best_row = None, None
    for start in range(0, space, CHUNK):
        block = _digits(start, min(space, start + CHUNK), channel_count, total)
        ok = np.ones(len(block), dtype=bool)
        for pairs in topo_pairs:
            ok &= (block[:, pairs[:, 0]] == block[:, pairs[:, 1]]).any(axis=1)
        if not ok.any():
            continue
        block = block[ok]
        ca = block[:, ra]
        vch = np.where(ca == block[:, rb], ca, 0)
        if len(edges):
            a, b = vch[:, edges[:, 0]], vch[:, edges[:, 1]]
            tids = ((a == b) & (a > 0)).sum(axis=1)
        else:
            tids = np.zeros(len(block), dtype=np.int64)
        k = int(np.argmin(tids))
        if best_tid is None or tids[k] < best_tid:
            best_tid, best_row = int(tids[k]), block[k].tolist()
    if best_row is None:
        raise PreconditionError("no topology-preserving assignment exists")
    return ChannelAssignment.from_flat(g, best_row)
