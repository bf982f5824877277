"""Interference and fairness metrics over channel assignments.

TID is reported as the number of unordered conflicting link pairs. The
per-link conflict numbers sum to exactly twice that value, so the
pair-summed reading is always recoverable.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping

import networkx as nx

from .channels import ChannelAssignment
from .conflict import ConflictGraph, active_conflicts
from .topology import WmnGraph

__all__ = [
    "ChannelAssignment",
    "TidReport",
    "TidState",
    "tid",
    "channel_distribution",
    "net_topo_preserved",
    "scheduling_rounds",
]


@dataclass(frozen=True)
class TidReport:
    tid: int
    conflict_numbers: dict[int, int]
    channel_radio_counts: dict[int, int]
    topology_preserved: bool


def tid(cg: ConflictGraph, ca: ChannelAssignment) -> TidReport:
    pairs = active_conflicts(cg, ca)
    numbers = dict.fromkeys(range(cg.m), 0)
    for a, b in pairs:
        numbers[a] += 1
        numbers[b] += 1
    return TidReport(
        tid=len(pairs),
        conflict_numbers=numbers,
        channel_radio_counts=ca.radio_counts_per_channel(cg.source.channel_count),
        topology_preserved=net_topo_preserved(cg.source, ca),
    )


def channel_distribution(ca: ChannelAssignment, channel_count: int) -> tuple[float, ...]:
    """Radios per channel divided by the smallest nonzero count.

    Channels carrying no radio report 0.
    """
    counts = ca.radio_counts_per_channel(channel_count)
    nonzero = [n for n in counts.values() if n]
    if not nonzero:
        return tuple(0.0 for _ in counts)
    base = min(nonzero)
    return tuple(counts[c] / base for c in range(1, channel_count + 1))


def net_topo_preserved(g: WmnGraph, ca: ChannelAssignment) -> bool:
    sets = [set(row) for row in ca.channels]
    return all(sets[i] & sets[j] for i, j in g.edges)


def scheduling_rounds(cg: ConflictGraph, ca: ChannelAssignment) -> int:
    """Greedy colouring bound on TDMA rounds needed to fire every WMN edge once.

    Each WMN edge is realized by its live radio pair with the fewest active
    conflicts (lowest vertex id on ties). Edges with no live radio pair are
    skipped.
    """
    pairs = active_conflicts(cg, ca)
    load: Counter[int] = Counter()
    for a, b in pairs:
        load[a] += 1
        load[b] += 1
    chosen: list[int] = []
    for e in sorted(cg.edge_links):
        live = [v for v in cg.edge_links[e] if cg.vertex_channel(ca, v)]
        if live:
            chosen.append(min(live, key=lambda v: (load[v], v)))
    if not chosen:
        return 1
    h = nx.Graph()
    h.add_nodes_from(chosen)
    picked = set(chosen)
    h.add_edges_from((a, b) for a, b in pairs if a in picked and b in picked)
    colouring = nx.greedy_color(h, strategy="largest_first")
    return max(colouring.values()) + 1


class TidState:
    """Mutable radio channels with O(degree) TID deltas.

    ``delta`` and ``apply`` take ``{flat radio index: new channel}``. With
    ``exhaustive=True`` every delta is computed by full recomputation, which
    is slow but independent of the incremental bookkeeping.
    """

    def __init__(self, cg: ConflictGraph, ca: ChannelAssignment, exhaustive: bool = False):
        ca.validate(cg.source)
        self.cg = cg
        self.exhaustive = exhaustive
        self.radio = ca.flat()
        self.vch = [self._vertex_channel(v, self.radio) for v in range(cg.m)]
        self.tid = self.full_tid()

    def _vertex_channel(self, v: int, radio) -> int:
        c = radio[self.cg.radio_a[v]]
        return c if c == radio[self.cg.radio_b[v]] else 0

    def full_tid(self, radio=None) -> int:
        vch = self.vch if radio is None else [self._vertex_channel(v, radio) for v in range(self.cg.m)]
        return sum(1 for a, b in self.cg.edges if vch[a] and vch[a] == vch[b])

    def _touching(self, affected: set[int], vch_of) -> int:
        adj = self.cg.sorted_adjacency
        total = 0
        for a in affected:
            ca = vch_of(a)
            if not ca:
                continue
            for b in adj[a]:
                if b in affected and b < a:
                    continue
                if vch_of(b) == ca:
                    total += 1
        return total

    def delta(self, changes: Mapping[int, int]) -> int:
        changes = {r: c for r, c in changes.items() if self.radio[r] != c}
        if not changes:
            return 0
        if self.exhaustive:
            radio = list(self.radio)
            for r, c in changes.items():
                radio[r] = c
            return self.full_tid(radio) - self.tid

        links = self.cg.radio_links
        affected: set[int] = set()
        for r in changes:
            affected.update(links[r])
        ra, rb, radio, vch = self.cg.radio_a, self.cg.radio_b, self.radio, self.vch

        def chan(r: int) -> int:
            return changes.get(r, radio[r])

        new_vch = {}
        for v in affected:
            c = chan(ra[v])
            new_vch[v] = c if c == chan(rb[v]) else 0

        before = self._touching(affected, vch.__getitem__)
        after = self._touching(affected, lambda v: new_vch[v] if v in new_vch else vch[v])
        return after - before

    def apply(self, changes: Mapping[int, int]) -> int:
        d = self.delta(changes)
        links = self.cg.radio_links
        for r, c in changes.items():
            self.radio[r] = c
        for r in changes:
            for v in links[r]:
                self.vch[v] = self._vertex_channel(v, self.radio)
        self.tid += d
        return self.tid

    # topology helpers -------------------------------------------------------

    def node_channels(self, node: int, radio=None) -> set[int]:
        radio = self.radio if radio is None else radio
        off = self.cg.radio_offsets[node]
        return set(radio[off : off + self.cg.source.nodes[node].radio_count])

    def edge_ok(self, i: int, j: int) -> bool:
        return bool(self.node_channels(i) & self.node_channels(j))

    def preserved_after(self, changes: Mapping[int, int]) -> bool:
        """Whether every WMN edge at a touched node keeps a common channel."""
        owner = self.cg.radio_owner
        nodes = {owner[r] for r in changes}
        radio = list(self.radio)
        for r, c in changes.items():
            radio[r] = c
        adj = self.cg.source.adjacency
        return all(
            self.node_channels(i, radio) & self.node_channels(j, radio) for i in nodes for j in adj[i]
        )

    def broken_after(self, changes: Mapping[int, int]) -> set[tuple[int, int]]:
        """Currently satisfied WMN edges that ``changes`` would disconnect."""
        owner = self.cg.radio_owner
        nodes = {owner[r] for r in changes}
        radio = list(self.radio)
        for r, c in changes.items():
            radio[r] = c
        adj = self.cg.source.adjacency
        out = set()
        for i in nodes:
            for j in adj[i]:
                if self.edge_ok(i, j) and not (self.node_channels(i, radio) & self.node_channels(j, radio)):
                    out.add((min(i, j), max(i, j)))
        return out

    def assignment(self) -> ChannelAssignment:
        return ChannelAssignment.from_flat(self.cg.source, self.radio)
