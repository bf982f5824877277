"""Physical mesh graphs: grid and random layouts, validation, JSON I/O."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Iterable

import jsonschema
import networkx as nx
import numpy as np

from .errors import (
    ChannelBudgetError,
    ConnectivityError,
    DerivedEdgeMismatchError,
    DuplicateNodeIdError,
    SchemaError,
    TopologyError,
)

DEFAULT_RANGE_M = 250.0
MAX_PLACEMENT_ATTEMPTS = 1000

WMN_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["range_m", "channel_count", "nodes"],
    "properties": {
        "range_m": {"type": "number", "exclusiveMinimum": 0},
        "channel_count": {"type": "integer", "minimum": 1},
        "nodes": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["id", "x", "y", "radios"],
                "properties": {
                    "id": {"type": "integer", "minimum": 0},
                    "x": {"type": "number"},
                    "y": {"type": "number"},
                    "radios": {"type": "integer", "minimum": 1},
                },
            },
        },
        # Never written by save_wmn; accepted only so stale documents can be rejected.
        "edges": {
            "type": "array",
            "items": {
                "type": "array",
                "items": {"type": "integer"},
                "minItems": 2,
                "maxItems": 2,
            },
        },
    },
}


@dataclass(frozen=True)
class Node:
    id: int
    position: tuple[float, float]
    radio_count: int

    def __post_init__(self) -> None:
        if self.radio_count < 1:
            raise TopologyError(f"node {self.id}: radio_count must be >= 1, got {self.radio_count}")


def in_range(a: tuple[float, float], b: tuple[float, float], range_m: float) -> bool:
    return math.hypot(a[0] - b[0], a[1] - b[1]) <= range_m


def derive_edges(positions: list[tuple[float, float]], range_m: float) -> frozenset[tuple[int, int]]:
    """Every unordered pair of positions within ``range_m`` of each other."""
    edges = set()
    for u in range(len(positions)):
        for v in range(u + 1, len(positions)):
            if in_range(positions[u], positions[v], range_m):
                edges.add((u, v))
    return frozenset(edges)


@dataclass(frozen=True, eq=False)
class WmnGraph:
    """A connected wireless mesh with per-node radio inventories.

    Edges are derived from positions and ``range_m`` on construction; they
    cannot be supplied independently.
    """

    nodes: tuple[Node, ...]
    range_m: float
    channel_count: int
    edges: frozenset[tuple[int, int]] = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise DuplicateNodeIdError(f"duplicate node ids: {dup}")
        if ids != list(range(len(ids))):
            raise TopologyError("node ids must be contiguous from 0 and listed in order")
        if self.range_m <= 0:
            raise TopologyError("range_m must be positive")
        max_r = max(n.radio_count for n in self.nodes)
        if self.channel_count <= max_r:
            raise ChannelBudgetError(
                f"channel_count ({self.channel_count}) must exceed the largest radio count ({max_r})"
            )
        edges = derive_edges([n.position for n in self.nodes], self.range_m)
        object.__setattr__(self, "edges", edges)
        if len(self.nodes) > 1 and not nx.is_connected(self._nx(edges)):
            raise ConnectivityError("range-induced graph is disconnected")

    def _nx(self, edges: Iterable[tuple[int, int]]) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(len(self.nodes)))
        g.add_edges_from(edges)
        return g

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WmnGraph):
            return NotImplemented
        return (self.nodes, self.range_m, self.channel_count) == (
            other.nodes,
            other.range_m,
            other.channel_count,
        )

    def __hash__(self) -> int:
        return hash((self.nodes, self.range_m, self.channel_count))

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def radio_counts(self) -> tuple[int, ...]:
        return tuple(node.radio_count for node in self.nodes)

    @property
    def total_radios(self) -> int:
        return sum(self.radio_counts)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])

    def to_networkx(self) -> nx.Graph:
        g = self._nx(self.sorted_edges)
        for node in self.nodes:
            g.nodes[node.id].update(pos=node.position, radios=node.radio_count)
        return g


def generate_grid(
    n: int,
    radios_per_node: int,
    channel_count: int,
    range_m: float = DEFAULT_RANGE_M,
) -> WmnGraph:
    """n x n lattice, row-major ids, spacing equal to the radio range.

    Only the four orthogonal neighbours fall within range, so the grid has
    exactly ``2 * n * (n - 1)`` edges.
    """
    if n < 2:
        raise TopologyError(f"grid size must be >= 2, got {n}")
    if radios_per_node < 1:
        raise TopologyError("radios_per_node must be >= 1")
    nodes = [
        Node(row * n + col, (col * range_m, row * range_m), radios_per_node)
        for row in range(n)
        for col in range(n)
    ]
    return WmnGraph(tuple(nodes), float(range_m), channel_count)


def generate_random(
    node_count: int,
    area_m: float,
    range_m: float,
    radios_per_node: int,
    channel_count: int,
    seed: int,
    max_attempts: int = MAX_PLACEMENT_ATTEMPTS,
) -> WmnGraph:
    """Uniform placement in an ``area_m`` square, resampled until connected."""
    if node_count < 2:
        raise TopologyError(f"node_count must be >= 2, got {node_count}")
    if channel_count <= radios_per_node:
        raise ChannelBudgetError(
            f"channel_count ({channel_count}) must exceed radios_per_node ({radios_per_node})"
        )
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        xy = rng.uniform(0.0, area_m, size=(node_count, 2))
        nodes = tuple(
            Node(i, (float(x), float(y)), radios_per_node) for i, (x, y) in enumerate(xy)
        )
        try:
            return WmnGraph(nodes, float(range_m), channel_count)
        except ConnectivityError:
            continue
    raise ConnectivityError(
        f"no connected placement of {node_count} nodes in {area_m}m x {area_m}m "
        f"with range {range_m}m after {max_attempts} attempts"
    )


def save_wmn(g: WmnGraph) -> dict[str, Any]:
    return {
        "range_m": g.range_m,
        "channel_count": g.channel_count,
        "nodes": [
            {"id": n.id, "x": n.position[0], "y": n.position[1], "radios": n.radio_count}
            for n in g.nodes
        ],
    }


def load_wmn(document: dict[str, Any]) -> WmnGraph:
    try:
        jsonschema.validate(document, WMN_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(f"invalid WMN document: {exc.message}") from exc

    raw = document["nodes"]
    ids = [entry["id"] for entry in raw]
    seen: set[int] = set()
    for i in ids:
        if i in seen:
            raise DuplicateNodeIdError(f"duplicate node id {i}")
        seen.add(i)
    if sorted(ids) != list(range(len(ids))):
        raise SchemaError("node ids must be contiguous from 0")

    nodes = tuple(
        Node(entry["id"], (float(entry["x"]), float(entry["y"])), entry["radios"])
        for entry in sorted(raw, key=lambda e: e["id"])
    )
    g = WmnGraph(nodes, float(document["range_m"]), document["channel_count"])

    if "edges" in document:
        listed = {tuple(sorted(e)) for e in document["edges"]}
        if listed != set(g.edges):
            raise DerivedEdgeMismatchError(
                "listed edges disagree with edges derived from positions and range "
                f"(extra: {sorted(listed - g.edges)}, missing: {sorted(g.edges - listed)})"
            )
    return g
