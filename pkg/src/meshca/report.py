"""Serialized outputs: CA documents, CSV rows, tables and graph exports.

Everything here is a pure function of its inputs and renders text with a
fixed layout, so identical runs produce byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .channels import ChannelAssignment
from .conflict import ConflictGraph, build_emmcg
from .errors import IncompleteAssignmentError, ReportError
from .metrics import net_topo_preserved, scheduling_rounds, tid
from .topology import WmnGraph

# -- CA documents ---------------------------------------------------------------


def ca_document(algorithm: str, seed: int, ca: ChannelAssignment, tid_trace: Sequence[int]) -> dict[str, Any]:
    channels = {f"{i}.{r}": c for i, row in enumerate(ca.channels) for r, c in enumerate(row)}
    return {"algorithm": algorithm, "seed": seed, "channels": channels, "tid_trace": list(tid_trace)}


def load_ca_document(doc: dict[str, Any], g: WmnGraph, cg: ConflictGraph | None = None) -> ChannelAssignment:
    """Rebuild the assignment and check it against the mesh it claims to describe.

    The final TID in ``tid_trace`` must match a fresh recomputation and every
    mesh edge must still share a channel.
    """
    try:
        mapping = {}
        for key, channel in doc["channels"].items():
            node, radio = key.split(".")
            mapping[(int(node), int(radio))] = int(channel)
        trace = [int(t) for t in doc["tid_trace"]]
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ReportError(f"malformed CA document: {exc}") from exc
    if len(trace) != 3:
        raise ReportError("tid_trace must hold three values")
    extra = [k for k in mapping if not (0 <= k[0] < g.n and 0 <= k[1] < g.radio_counts[k[0]])]
    if extra:
        raise ReportError(f"document names radios absent from the mesh: {extra[:5]}")
    try:
        ca = ChannelAssignment.from_mapping(g, mapping)
    except IncompleteAssignmentError as exc:
        raise ReportError(str(exc)) from exc
    bad = [c for c in ca.flat() if not 1 <= c <= g.channel_count]
    if bad:
        raise ReportError(f"channels outside 1..{g.channel_count}: {sorted(set(bad))}")
    if not net_topo_preserved(g, ca):
        raise ReportError("assignment does not preserve the mesh topology")
    actual = tid(cg if cg is not None else build_emmcg(g), ca).tid
    if actual != trace[-1]:
        raise ReportError(f"recorded final TID {trace[-1]} but recomputation gives {actual}")
    return ca


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


# -- conflict graph exports ------------------------------------------------------


def emmcg_dot(cg: ConflictGraph, name: str = "emmcg") -> str:
    """Graphviz source; co-location edges are dashed red."""
    lines = [f"graph {name} {{", "  node [shape=box];"]
    for v in cg.vertices:
        lines.append(f'  v{v.id} [label="{v.label}"];')
    for a, b in sorted(cg.interference_edges):
        lines.append(f"  v{a} -- v{b};")
    for a, b in sorted(cg.colocation_edges):
        lines.append(f'  v{a} -- v{b} [style=dashed, color=red, kind="colocation"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emmcg_adjacency(cg: ConflictGraph) -> dict[str, Any]:
    return {
        "vertices": [
            {"id": v.id, "label": v.label, "a": list(v.endpoint_a), "b": list(v.endpoint_b)} for v in cg.vertices
        ],
        "interference_edges": [list(e) for e in sorted(cg.interference_edges)],
        "colocation_edges": [list(e) for e in sorted(cg.colocation_edges)],
    }


# -- tabular reports ----------------------------------------------------------------


@dataclass(frozen=True)
class ReportRow:
    scenario: str
    algorithm: str
    tid: int
    topo_preserved: bool
    rounds: int
    channel_radios: tuple[int, ...]
    # Only used by the grouped table and series; not a CSV column.
    size: str = ""
    radios: int = 0

    @property
    def ratios(self) -> tuple[float, ...]:
        nonzero = [n for n in self.channel_radios if n]
        low = min(nonzero) if nonzero else 1
        return tuple(n / low if n else 0.0 for n in self.channel_radios)


def report_row(
    scenario: str,
    algorithm: str,
    g: WmnGraph,
    cg: ConflictGraph,
    ca: ChannelAssignment,
    channel_count: int,
    size: str = "",
) -> ReportRow:
    counts = ca.radio_counts_per_channel(channel_count)
    return ReportRow(
        scenario=scenario,
        algorithm=algorithm,
        tid=tid(cg, ca).tid,
        topo_preserved=net_topo_preserved(g, ca),
        rounds=scheduling_rounds(cg, ca),
        channel_radios=tuple(counts[c] for c in range(1, channel_count + 1)),
        size=size,
        radios=max(g.radio_counts),
    )


def csv_header(channel_count: int) -> list[str]:
    return ["scenario", "algorithm", "tid", "topo_preserved", "rounds"] + [
        f"ch{c}_radios" for c in range(1, channel_count + 1)
    ]


def render_csv(rows: Iterable[ReportRow], channel_count: int | None = None) -> str:
    """CSV with one column per channel; narrower rows are padded with zeros."""
    rows = list(rows)
    width = channel_count or max((len(r.channel_radios) for r in rows), default=0)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(csv_header(width))
    for r in rows:
        counts = list(r.channel_radios) + [0] * (width - len(r.channel_radios))
        writer.writerow([r.scenario, r.algorithm, r.tid, str(r.topo_preserved).lower(), r.rounds, *counts])
    return buf.getvalue()


def distribution_table(rows: Iterable[ReportRow]) -> str:
    """Grid size, radios per node and normalized per-channel radio ratios."""
    rows = list(rows)
    out = [f"{'Size':<10}{'Radios':>7}  {'Algorithm':<12}R_C1 : R_C2 : ..."]
    for r in rows:
        ratios = " : ".join(f"{x:.2f}" for x in r.ratios)
        out.append(f"{r.size or r.scenario:<10}{r.radios:>7}  {r.algorithm:<12}{ratios}")
    return "\n".join(out) + "\n"


def tid_series(rows: Iterable[ReportRow]) -> str:
    """TID per topology size (rows) and algorithm (columns), as CSV."""
    rows = list(rows)
    sizes: list[str] = []
    algorithms: list[str] = []
    value: dict[tuple[str, str], int] = {}
    for r in rows:
        key = r.size or r.scenario
        if key not in sizes:
            sizes.append(key)
        if r.algorithm not in algorithms:
            algorithms.append(r.algorithm)
        value[(key, r.algorithm)] = r.tid
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["size", *algorithms])
    for s in sizes:
        writer.writerow([s, *(value.get((s, a), "") for a in algorithms)])
    return buf.getvalue()

