"""Radio-level link enumeration and the co-location aware conflict graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .channels import ChannelAssignment
from .topology import WmnGraph

Endpoint = tuple[int, int]  # (node id, radio index)
Pair = tuple[int, int]


@dataclass(frozen=True)
class LinkVertex:
    """A potential link between one radio of each endpoint node."""

    id: int
    endpoint_a: Endpoint
    endpoint_b: Endpoint

    def __post_init__(self) -> None:
        if self.endpoint_a[0] == self.endpoint_b[0]:
            raise ValueError(f"link {self.id} is a self-link on node {self.endpoint_a[0]}")
        if self.endpoint_a[0] > self.endpoint_b[0]:
            a, b = self.endpoint_b, self.endpoint_a
            object.__setattr__(self, "endpoint_a", a)
            object.__setattr__(self, "endpoint_b", b)

    @property
    def nodes(self) -> tuple[int, int]:
        return self.endpoint_a[0], self.endpoint_b[0]

    @property
    def label(self) -> str:
        (u, ru), (v, rv) = self.endpoint_a, self.endpoint_b
        return f"{u}.{ru}–{v}.{rv}"


def enumerate_links(g: WmnGraph) -> list[LinkVertex]:
    """One vertex per (radio of u, radio of v) for every WMN edge (u, v)."""
    out: list[LinkVertex] = []
    for u, v in g.sorted_edges:
        for ru in range(g.nodes[u].radio_count):
            for rv in range(g.nodes[v].radio_count):
                out.append(LinkVertex(len(out), (u, ru), (v, rv)))
    return out


@dataclass(frozen=True, eq=False)
class ConflictGraph:
    """Channel-agnostic worst-case conflict graph over radio-level links.

    Two link vertices sharing a node are joined by a co-location edge; two
    links whose endpoints are within radio range of each other are joined by
    an interference edge. A pair qualifying for both is stored only as
    co-location.
    """

    source: WmnGraph
    vertices: tuple[LinkVertex, ...]
    interference_edges: frozenset[Pair]
    colocation_edges: frozenset[Pair]
    # Flat radio index of each vertex endpoint; see ``radio_index``.
    radio_a: tuple[int, ...] = field(init=False, repr=False)
    radio_b: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        ra = tuple(self.radio_index(*v.endpoint_a) for v in self.vertices)
        rb = tuple(self.radio_index(*v.endpoint_b) for v in self.vertices)
        object.__setattr__(self, "radio_a", ra)
        object.__setattr__(self, "radio_b", rb)

    @cached_property
    def radio_offsets(self) -> tuple[int, ...]:
        offsets, pos = [], 0
        for k in self.source.radio_counts:
            offsets.append(pos)
            pos += k
        return tuple(offsets)

    def radio_index(self, node: int, radio: int) -> int:
        return self.radio_offsets[node] + radio

    @cached_property
    def radio_owner(self) -> tuple[int, ...]:
        return tuple(i for i, k in enumerate(self.source.radio_counts) for _ in range(k))

    @property
    def m(self) -> int:
        return len(self.vertices)

    @cached_property
    def edges(self) -> frozenset[Pair]:
        return self.interference_edges | self.colocation_edges

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def sorted_adjacency(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(s)) for s in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def radio_links(self) -> tuple[tuple[int, ...], ...]:
        """V_r for every flat radio index: the link vertices using that radio."""
        links: list[list[int]] = [[] for _ in range(self.source.total_radios)]
        for v in range(self.m):
            links[self.radio_a[v]].append(v)
            links[self.radio_b[v]].append(v)
        return tuple(tuple(x) for x in links)

    @cached_property
    def edge_links(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Link vertices realizing each WMN edge, in ascending id order."""
        out: dict[tuple[int, int], list[int]] = {}
        for lv in self.vertices:
            out.setdefault(lv.nodes, []).append(lv.id)
        return {e: tuple(ids) for e, ids in out.items()}

    def vertex_channel(self, ca: ChannelAssignment, v: int) -> int:
        """Channel carried by link ``v`` under ``ca``; 0 if its radios disagree."""
        lv = self.vertices[v]
        c = ca.channel(*lv.endpoint_a)
        return c if c == ca.channel(*lv.endpoint_b) else 0


def build_emmcg(g: WmnGraph) -> ConflictGraph:
    vertices = enumerate_links(g)
    by_edge: dict[tuple[int, int], list[int]] = {}
    for lv in vertices:
        by_edge.setdefault(lv.nodes, []).append(lv.id)
    wmn_edges = list(by_edge)

    incident: list[list[int]] = [[] for _ in range(g.n)]
    for k, (u, v) in enumerate(wmn_edges):
        incident[u].append(k)
        incident[v].append(k)

    colocation: set[Pair] = set()
    interference: set[Pair] = set()

    for e in wmn_edges:
        colocation.update(combinations(by_edge[e], 2))

    adj = g.adjacency
    for k1, (a, b) in enumerate(wmn_edges):
        near = {a, b, *adj[a], *adj[b]}
        candidates = {k2 for x in near for k2 in incident[x] if k2 > k1}
        for k2 in candidates:
            c, d = wmn_edges[k2]
            target = colocation if {a, b} & {c, d} else interference
            for x in by_edge[(a, b)]:
                for y in by_edge[(c, d)]:
                    target.add((x, y) if x < y else (y, x))

    return ConflictGraph(g, tuple(vertices), frozenset(interference), frozenset(colocation))


def active_conflicts(cg: ConflictGraph, ca: ChannelAssignment) -> set[Pair]:
    """E-MMCG edges whose two links are live on the same channel under ``ca``."""
    ca.validate(cg.source)
    vc = [cg.vertex_channel(ca, v) for v in range(cg.m)]
    return {(a, b) for a, b in cg.edges if vc[a] and vc[a] == vc[b]}
