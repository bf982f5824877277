"""Topology restoration and radio co-location optimization (RCO).

Both passes operate on a :class:`~meshca.metrics.TidState` so every
candidate move is scored by an incremental TID delta.
"""

from __future__ import annotations

import logging

from ..channels import ChannelAssignment
from ..conflict import ConflictGraph, build_emmcg
from ..errors import PreconditionError
from ..metrics import TidState, net_topo_preserved
from ..topology import WmnGraph
from .common import RcoCommit

log = logging.getLogger(__name__)


def _restore_pass(state: TidState) -> None:
    g = state.cg.source
    for i in range(g.n):
        for j in g.adjacency[i]:
            if j < i or state.edge_ok(i, j):
                continue
            base = state.cg.radio_offsets[j]
            best = None
            for c in sorted(state.node_channels(i)):
                for r in range(g.nodes[j].radio_count):
                    move = {base + r: c}
                    breaks = bool(state.broken_after(move))
                    key = (breaks, state.delta(move), c, r)
                    if best is None or key < best[0]:
                        best = (key, move)
            state.apply(best[1])


def restore_topology(state: TidState, guard_events: list[str] | None = None) -> None:
    """Forward correction until every WMN edge shares a channel.

    For an edge (i, j) with i < j and no common channel, one radio of j takes
    a channel of i. Moves that would disconnect another currently connected
    edge of j are only used when no safe move exists; repeated sweeps then
    settle the cascade. If sweeps cannot settle it (e.g. single-radio nodes
    with no lower-numbered neighbour), radio 0 of every node is placed on a
    shared backbone channel.
    """
    g = state.cg.source
    for _ in range(max(1, g.n)):
        _restore_pass(state)
        if all(state.edge_ok(i, j) for i, j in g.edges):
            return
    c0 = state.radio[0]
    moves = {state.cg.radio_offsets[i]: c0 for i in range(g.n)}
    state.apply(moves)
    msg = f"restoration sweeps did not converge; radio 0 of every node moved to channel {c0}"
    log.warning(msg)
    if guard_events is not None:
        guard_events.append(msg)


def topology_restore(
    g: WmnGraph,
    ca: ChannelAssignment,
    channel_count: int,
    cg: ConflictGraph | None = None,
) -> ChannelAssignment:
    cg = cg if cg is not None else build_emmcg(g)
    state = TidState(cg, ca)
    restore_topology(state)
    return state.assignment()


def co_location_pass(state: TidState, channel_count: int, guard_events: list[str]) -> None:
    """Re-channel all but the lowest-index radio of each duplicate group.

    Each moved radio takes the unused channel with the smallest TID that
    keeps the topology intact; with no such channel it stays put and a guard
    event is logged.
    """
    cg = state.cg
    for i, node in enumerate(cg.source.nodes):
        base = cg.radio_offsets[i]
        for r in range(1, node.radio_count):
            c = state.radio[base + r]
            if c not in state.radio[base : base + r]:
                continue
            used = set(state.radio[base : base + node.radio_count])
            options = []
            for alt in range(1, channel_count + 1):
                move = {base + r: alt}
                if alt not in used and state.preserved_after(move):
                    options.append((state.delta(move), alt, move))
            if options:
                state.apply(min(options, key=lambda o: o[:2])[2])
            else:
                guard_events.append(f"node {i} radio {r}: kept duplicate channel {c}")


def link_pass(state: TidState, channel_count: int, guard_duplicates: bool = True) -> list[RcoCommit]:
    """Try every alternative channel on each WMN edge's realized link once.

    The realized link is the live radio pair with the lowest vertex id. A
    replacement is committed on both endpoint radios only if the topology
    stays intact, TID strictly drops, and no co-located radio already uses
    the new channel.
    """
    cg = state.cg
    commits: list[RcoCommit] = []
    for edge in cg.source.sorted_edges:
        live = [v for v in cg.edge_links[edge] if state.vch[v]]
        if not live:
            continue
        v = live[0]
        ra, rb = cg.radio_a[v], cg.radio_b[v]
        i, j = edge
        for alt in range(1, channel_count + 1):
            cur = state.radio[ra]
            if alt == cur:
                continue
            siblings = [
                state.radio[x]
                for node in (i, j)
                for x in range(
                    cg.radio_offsets[node], cg.radio_offsets[node] + cg.source.nodes[node].radio_count
                )
                if x not in (ra, rb)
            ]
            if guard_duplicates and alt in siblings:
                continue
            move = {ra: alt, rb: alt}
            d = state.delta(move)
            if d < 0 and state.preserved_after(move):
                before = state.tid
                state.apply(move)
                commits.append(RcoCommit(edge, (ra, rb), cur, alt, before, state.tid))
    return commits


def run_rco(state: TidState, channel_count: int) -> tuple[list[RcoCommit], list[str]]:
    g = state.cg.source
    if not all(state.edge_ok(i, j) for i, j in g.edges):
        raise PreconditionError("RCO requires a topology-preserving assignment")
    guard_events: list[str] = []
    co_location_pass(state, channel_count, guard_events)
    commits = link_pass(state, channel_count)
    return commits, guard_events


def rco(
    g: WmnGraph,
    cg: ConflictGraph,
    ca: ChannelAssignment,
    channel_count: int,
) -> ChannelAssignment:
    if not net_topo_preserved(g, ca):
        raise PreconditionError("RCO requires a topology-preserving assignment")
    state = TidState(cg, ca)
    run_rco(state, channel_count)
    return state.assignment()
