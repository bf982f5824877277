"""Optimized independent-set channel assignment (OIS-CA)."""

from __future__ import annotations

from ..conflict import ConflictGraph
from ..metrics import TidState
from ..topology import WmnGraph
from .common import CaTrace, map_radios, next_channel, require_channels
from .partition import partition_independent_sets
from .repair import restore_topology, run_rco


def ois_ca(
    g: WmnGraph,
    cg: ConflictGraph,
    channel_count: int,
    radio_rule: str = "last",
    seed: int = 0,
) -> CaTrace:
    require_channels(g, channel_count)
    partition = partition_independent_sets(cg)

    vertex_channels = [0] * cg.m
    order: list[int] = []
    channel = 1
    for members in partition.sets:
        for v in members:
            vertex_channels[v] = channel
            order.append(v)
        channel = next_channel(channel, channel_count)

    initial = map_radios(cg, vertex_channels, order, radio_rule, seed)
    state = TidState(cg, initial)
    t0 = state.tid
    guard: list[str] = []
    restore_topology(state, guard)
    post_topology = state.assignment()
    t1 = state.tid
    commits, rco_guard = run_rco(state, channel_count)
    return CaTrace(
        algorithm="ois-ca",
        initial_ca=initial,
        post_topology_ca=post_topology,
        final_ca=state.assignment(),
        tid_sequence=(t0, t1, state.tid),
        seed=seed,
        vertex_channels=tuple(vertex_channels),
        rco_commits=tuple(commits),
        guard_events=tuple(guard + rco_guard),
    )
