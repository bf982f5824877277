"""Machinery shared by every channel-assignment algorithm."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from ..channels import ChannelAssignment
from ..conflict import ConflictGraph
from ..errors import PreconditionError
from ..topology import WmnGraph

RADIO_RULES = ("last", "majority")


@dataclass(frozen=True)
class RcoCommit:
    """One accepted link re-channelling in the second RCO phase."""

    edge: tuple[int, int]
    radios: tuple[int, int]
    old_channel: int
    new_channel: int
    tid_before: int
    tid_after: int


@dataclass(frozen=True)
class CaTrace:
    """Audit trail of one algorithm run.

    ``tid_sequence`` holds the TID after the initial radio mapping, after
    topology restoration and after radio co-location optimization. Algorithms
    without an RCO pass repeat the post-restoration value.
    """

    algorithm: str
    initial_ca: ChannelAssignment
    post_topology_ca: ChannelAssignment
    final_ca: ChannelAssignment
    tid_sequence: tuple[int, int, int]
    seed: int = 0
    vertex_channels: tuple[int, ...] = ()
    eiz_sequence: tuple[tuple[int, ...], ...] = ()
    rco_commits: tuple[RcoCommit, ...] = ()
    guard_events: tuple[str, ...] = field(default=())


def next_channel(channel: int, channel_count: int) -> int:
    return channel % channel_count + 1


def require_channels(g: WmnGraph, channel_count: int) -> None:
    top = max(g.radio_counts)
    if channel_count <= top:
        raise PreconditionError(
            f"need more channels ({channel_count}) than radios on any node ({top})"
        )
    if channel_count > g.channel_count:
        raise PreconditionError(
            f"channel count {channel_count} exceeds the {g.channel_count} available to the mesh"
        )


def map_radios(
    cg: ConflictGraph,
    vertex_channels: Sequence[int],
    order: Sequence[int],
    rule: str = "last",
    seed: int = 0,
) -> ChannelAssignment:
    """Collapse per-link channels onto radios.

    ``rule="last"`` gives each radio the channel of the last-processed link in
    its V_r (``order`` is the processing order). ``rule="majority"`` picks the
    most frequent channel in V_r instead, breaking ties with a generator
    seeded by ``seed``.
    """
    if rule not in RADIO_RULES:
        raise ValueError(f"unknown radio rule {rule!r}")
    position = {v: k for k, v in enumerate(order)}
    rng = random.Random(seed)
    flat = []
    for links in cg.radio_links:
        if not links:
            flat.append(1)
            continue
        if rule == "last":
            flat.append(vertex_channels[max(links, key=position.__getitem__)])
            continue
        counts = Counter(vertex_channels[v] for v in links)
        top = max(counts.values())
        tied = sorted(c for c, n in counts.items() if n == top)
        flat.append(tied[0] if len(tied) == 1 else rng.choice(tied))
    return ChannelAssignment.from_flat(cg.source, flat)
