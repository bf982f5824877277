"""Elevated-interference-zone mitigation channel assignment (EIZM-CA).

An EIZ is a link whose conflict-graph vertex has many neighbours. The
algorithm walks breadth-first level-sets outward from the highest-degree
vertex, seeds each level with a cyclic channel, then re-channels the level's
members one by one: the highest-degree member first, then repeatedly the
member sharing the most neighbours with the previous pick.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..conflict import ConflictGraph
from ..metrics import TidState
from ..topology import WmnGraph
from .common import CaTrace, map_radios, next_channel, require_channels
from .repair import restore_topology, run_rco

Adjacency = Sequence[frozenset[int]]


@dataclass(frozen=True)
class LevelStructure:
    root: int
    levels: tuple[tuple[int, ...], ...]

    def level_of(self, v: int) -> int:
        for k, level in enumerate(self.levels):
            if v in level:
                return k
        raise KeyError(v)


def maximal_degree_vertex(adjacency: Adjacency, candidates: Sequence[int] | None = None) -> int:
    pool = range(len(adjacency)) if candidates is None else candidates
    return min(pool, key=lambda v: (-len(adjacency[v]), v))


def level_structure(adjacency: Adjacency, root: int) -> LevelStructure:
    dist = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in sorted(adjacency[u]):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    levels: list[list[int]] = [[] for _ in range(max(dist.values()) + 1)]
    for v, d in dist.items():
        levels[d].append(v)
    return LevelStructure(root, tuple(tuple(sorted(level)) for level in levels))


def eiz_order(adjacency: Adjacency, level: Sequence[int]) -> list[int]:
    """EIZ visiting order within one level-set.

    First pick: highest degree (lowest id on ties). Then: most mutual
    neighbours with the previous pick, ties to higher degree, then lower id.
    """
    if not level:
        return []
    ids = np.asarray(level)
    rows = np.zeros((len(ids), len(adjacency)), dtype=bool)
    for k, v in enumerate(ids):
        rows[k, list(adjacency[v])] = True
    degree = rows.sum(axis=1)
    alive = np.ones(len(ids), dtype=bool)
    first = maximal_degree_vertex(adjacency, sorted(level))
    k = int(np.flatnonzero(ids == first)[0])
    order = [first]
    alive[k] = False
    while alive.any():
        mutual = rows[:, rows[k]].sum(axis=1)
        cand = np.flatnonzero(alive)
        # lexsort: last key is primary
        k = int(cand[np.lexsort((ids[cand], -degree[cand], -mutual[cand]))[0]])
        order.append(int(ids[k]))
        alive[k] = False
    return order


def eiz_sequence(adjacency: Adjacency, levels: LevelStructure) -> list[list[int]]:
    return [eiz_order(adjacency, level) for level in levels.levels]


def _least_conflicting(adjacency: Adjacency, colours: list[int], v: int, channel_count: int) -> int:
    counts = [0] * (channel_count + 1)
    for w in adjacency[v]:
        counts[colours[w]] += 1
    best = min(counts[1:])
    if counts[colours[v]] == best:
        return colours[v]
    return next(c for c in range(1, channel_count + 1) if counts[c] == best)


def eizm_vertex_channels(
    adjacency: Adjacency,
    channel_count: int,
    root: int | None = None,
) -> tuple[list[int], list[list[int]], LevelStructure]:
    """Link-level channels plus the EIZ visiting order per level-set."""
    if root is None:
        root = maximal_degree_vertex(adjacency)
    ls = level_structure(adjacency, root)
    colours = [0] * len(adjacency)
    channel = 1
    for level in ls.levels:
        for v in level:
            colours[v] = channel
        channel = next_channel(channel, channel_count)

    sequence = eiz_sequence(adjacency, ls)
    for level_order in sequence:
        for v in level_order:
            colours[v] = _least_conflicting(adjacency, colours, v, channel_count)
    return colours, sequence, ls


def eizm_ca(
    g: WmnGraph,
    cg: ConflictGraph,
    channel_count: int,
    radio_rule: str = "last",
    seed: int = 0,
) -> CaTrace:
    require_channels(g, channel_count)
    colours, sequence, ls = eizm_vertex_channels(cg.adjacency, channel_count)
    if sum(len(level) for level in ls.levels) != cg.m:
        raise ValueError("conflict graph is disconnected")
    order = [v for level in sequence for v in level]

    initial = map_radios(cg, colours, order, radio_rule, seed)
    state = TidState(cg, initial)
    t0 = state.tid
    guard: list[str] = []
    restore_topology(state, guard)
    post_topology = state.assignment()
    t1 = state.tid
    commits, rco_guard = run_rco(state, channel_count)
    return CaTrace(
        algorithm="eizm-ca",
        initial_ca=initial,
        post_topology_ca=post_topology,
        final_ca=state.assignment(),
        tid_sequence=(t0, t1, state.tid),
        seed=seed,
        vertex_channels=tuple(colours),
        eiz_sequence=tuple(tuple(level) for level in sequence),
        rco_commits=tuple(commits),
        guard_events=tuple(guard + rco_guard),
    )
