"""Radio co-location aware channel assignment for multi-radio mesh networks."""

from .channels import ChannelAssignment
from .conflict import ConflictGraph, LinkVertex, active_conflicts, build_emmcg, enumerate_links
from .metrics import TidReport, channel_distribution, net_topo_preserved, scheduling_rounds, tid
from .topology import Node, WmnGraph, generate_grid, generate_random, load_wmn, save_wmn

__version__ = "0.1.0"

__all__ = [
    "ChannelAssignment",
    "ConflictGraph",
    "LinkVertex",
    "Node",
    "TidReport",
    "WmnGraph",
    "active_conflicts",
    "build_emmcg",
    "channel_distribution",
    "enumerate_links",
    "generate_grid",
    "generate_random",
    "load_wmn",
    "net_topo_preserved",
    "save_wmn",
    "scheduling_rounds",
    "tid",
]
