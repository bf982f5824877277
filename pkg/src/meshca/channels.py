"""Radio-to-channel maps."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import IncompleteAssignmentError
from .topology import WmnGraph

Radio = tuple[int, int]  # (node id, radio index)


@dataclass(frozen=True)
class ChannelAssignment:
    """Channels per node, one entry per radio.

    ``channels[i][r]`` is the channel of radio ``r`` on node ``i``. Channels are
    1-based, matching the channel set ``{1..M}``.
    """

    channels: tuple[tuple[int, ...], ...]

    @classmethod
    def from_lists(cls, channels: Sequence[Sequence[int]]) -> "ChannelAssignment":
        return cls(tuple(tuple(int(c) for c in row) for row in channels))

    @classmethod
    def from_mapping(cls, g: WmnGraph, mapping: Mapping[Radio, int]) -> "ChannelAssignment":
        missing = [
            (i, r) for i, k in enumerate(g.radio_counts) for r in range(k) if (i, r) not in mapping
        ]
        if missing:
            raise IncompleteAssignmentError(f"no channel for radios {missing[:5]}")
        return cls(tuple(tuple(mapping[(i, r)] for r in range(k)) for i, k in enumerate(g.radio_counts)))

    @classmethod
    def uniform(cls, g: WmnGraph, channel: int = 1) -> "ChannelAssignment":
        return cls(tuple((channel,) * k for k in g.radio_counts))

    @classmethod
    def from_flat(cls, g: WmnGraph, flat: Sequence[int]) -> "ChannelAssignment":
        out, pos = [], 0
        for k in g.radio_counts:
            out.append(tuple(int(c) for c in flat[pos : pos + k]))
            pos += k
        return cls(tuple(out))

    def channel(self, node: int, radio: int) -> int:
        return self.channels[node][radio]

    def ch(self, node: int) -> tuple[int, ...]:
        """Ch_i: the multiset of channels on node ``i``'s radios."""
        return self.channels[node]

    def flat(self) -> list[int]:
        return [c for row in self.channels for c in row]

    def as_dict(self) -> dict[Radio, int]:
        return {(i, r): c for i, row in enumerate(self.channels) for r, c in enumerate(row)}

    def radio_counts_per_channel(self, channel_count: int) -> dict[int, int]:
        counts = Counter(self.flat())
        return {c: counts.get(c, 0) for c in range(1, channel_count + 1)}

    def duplicate_count(self) -> int:
        """Radios sharing a channel with a co-located radio, beyond the first."""
        return sum(len(row) - len(set(row)) for row in self.channels)

    def validate(self, g: WmnGraph) -> None:
        if len(self.channels) != g.n:
            raise IncompleteAssignmentError(
                f"assignment covers {len(self.channels)} nodes, graph has {g.n}"
            )
        for i, (row, k) in enumerate(zip(self.channels, g.radio_counts)):
            if len(row) != k:
                raise IncompleteAssignmentError(f"node {i}: {len(row)} channels for {k} radios")
            for c in row:
                if not 1 <= c <= g.channel_count:
                    raise IncompleteAssignmentError(
                        f"node {i}: channel {c} outside 1..{g.channel_count}"
                    )
