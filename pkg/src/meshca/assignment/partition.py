"""Single-pass independent-set partition of the conflict graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..conflict import ConflictGraph


@dataclass(frozen=True)
class IsPartition:
    sets: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.sets)

    def sizes(self) -> list[int]:
        return [len(s) for s in self.sets]


def partition_adjacency(adjacency: Sequence[frozenset[int]]) -> IsPartition:
    """Visit vertices in id order; each joins the smallest compatible set.

    Ties go to the lowest set index. A vertex adjacent to a member of every
    existing set opens a new one.
    """
    sets: list[list[int]] = []
    member_of: dict[int, int] = {}
    for v in range(len(adjacency)):
        blocked = {member_of[u] for u in adjacency[v] if u in member_of}
        best = None
        for k, s in enumerate(sets):
            if k not in blocked and (best is None or len(s) < len(sets[best])):
                best = k
        if best is None:
            sets.append([])
            best = len(sets) - 1
        sets[best].append(v)
        member_of[v] = best
    return IsPartition(tuple(tuple(s) for s in sets))


def partition_independent_sets(cg: ConflictGraph) -> IsPartition:
    return partition_adjacency(cg.adjacency)
