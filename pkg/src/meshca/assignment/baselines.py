"""Reference assignments without radio co-location optimization.

``mais_ca`` colours successive greedy maximal independent sets;
``bfs_ca`` is a static simplification of BFS-CA (labelled ``bfs-ca-lite``)
that colours links in breadth-first visiting order. The original BFS-CA
ranks channels by measured interference, which has no static analogue.
"""

from __future__ import annotations

from collections import deque

from ..channels import ChannelAssignment
from ..conflict import ConflictGraph
from ..metrics import TidState
from ..topology import WmnGraph
from .common import CaTrace, map_radios, next_channel, require_channels
from .eizm import Adjacency
from .repair import restore_topology


def greedy_mis_rounds(adjacency: Adjacency) -> list[list[int]]:
    """Peel maximal independent sets until the graph is empty.

    Each round scans the surviving vertices by ascending surviving degree
    (lowest id on ties) and keeps every vertex with no kept neighbour.
    """
    remaining = set(range(len(adjacency)))
    degree = [len(a) for a in adjacency]
    rounds = []
    while remaining:
        ranked = sorted(remaining, key=lambda v: (degree[v], v))
        blocked: set[int] = set()
        mis = []
        for v in ranked:
            if v not in blocked:
                mis.append(v)
                blocked |= adjacency[v]
        rounds.append(mis)
        remaining.difference_update(mis)
        for v in mis:
            for w in adjacency[v]:
                degree[w] -= 1
    return rounds


def bfs_visit_order(adjacency: Adjacency, root: int) -> list[int]:
    seen = {root}
    order = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in sorted(adjacency[u]):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return order


def mais_vertex_channels(adjacency: Adjacency, channel_count: int) -> tuple[list[int], list[int]]:
    """Cyclic channel per peeled MIS; returns (channels, processing order)."""
    colours = [0] * len(adjacency)
    order: list[int] = []
    channel = 1
    for mis in greedy_mis_rounds(adjacency):
        for v in mis:
            colours[v] = channel
            order.append(v)
        channel = next_channel(channel, channel_count)
    return colours, order


def bfs_vertex_channels(adjacency: Adjacency, root: int, channel_count: int) -> tuple[list[int], list[int]]:
    """Channels cycled along the breadth-first visit, never reset per level."""
    order = bfs_visit_order(adjacency, root)
    colours = [0] * len(adjacency)
    for k, v in enumerate(order):
        colours[v] = k % channel_count + 1
    return colours, order


def _finish(
    name: str,
    g: WmnGraph,
    cg: ConflictGraph,
    colours: list[int],
    order: list[int],
    radio_rule: str,
    seed: int,
) -> CaTrace:
    initial = map_radios(cg, colours, order, radio_rule, seed)
    state = TidState(cg, initial)
    t0 = state.tid
    guard: list[str] = []
    restore_topology(state, guard)
    final = state.assignment()
    return CaTrace(
        algorithm=name,
        initial_ca=initial,
        post_topology_ca=final,
        final_ca=final,
        tid_sequence=(t0, state.tid, state.tid),
        seed=seed,
        vertex_channels=tuple(colours),
        guard_events=tuple(guard),
    )


def mais_ca(
    g: WmnGraph,
    cg: ConflictGraph,
    channel_count: int,
    radio_rule: str = "last",
    seed: int = 0,
) -> CaTrace:
    require_channels(g, channel_count)
    colours, order = mais_vertex_channels(cg.adjacency, channel_count)
    return _finish("mais-ca", g, cg, colours, order, radio_rule, seed)


def bfs_ca(
    g: WmnGraph,
    cg: ConflictGraph,
    channel_count: int,
    gateway: int = 0,
    radio_rule: str = "last",
    seed: int = 0,
) -> CaTrace:
    require_channels(g, channel_count)
    if not 0 <= gateway < g.n:
        raise ValueError(f"gateway {gateway} is not a node of the mesh")
    root = min(v.id for v in cg.vertices if gateway in v.nodes)
    colours, order = bfs_vertex_channels(cg.adjacency, root, channel_count)
    return _finish("bfs-ca-lite", g, cg, colours, order, radio_rule, seed)


def uniform_ca(g: WmnGraph, cg: ConflictGraph, channel_count: int, seed: int = 0) -> CaTrace:
    """Every radio on channel 1: the worst-case reference."""
    ca = ChannelAssignment.uniform(g)
    t = TidState(cg, ca).tid
    return CaTrace("uniform", ca, ca, ca, (t, t, t), seed=seed)
