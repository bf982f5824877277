import json
import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from meshca import Node, WmnGraph, build_emmcg, generate_grid  # noqa: E402

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
R = 250.0


def mesh(positions, radios, channels, range_m=R):
    if isinstance(radios, int):
        radios = [radios] * len(positions)
    nodes = tuple(Node(i, (float(x), float(y)), k) for i, ((x, y), k) in enumerate(zip(positions, radios)))
    return WmnGraph(nodes, range_m, channels)


def two_node(radios=1, channels=2):
    return mesh([(0, 0), (R, 0)], radios, channels)


def path3(radios=1, channels=2):
    return mesh([(0, 0), (R, 0), (2 * R, 0)], radios, channels)


@pytest.fixture
def grid3():
    g = generate_grid(3, 2, 3)
    return g, build_emmcg(g)


@pytest.fixture
def grid5():
    g = generate_grid(5, 2, 3)
    return g, build_emmcg(g)


@pytest.fixture(scope="session")
def eiz_walkthrough():
    doc = json.loads((FIXTURES / "eiz_walkthrough.json").read_text())
    names = doc["vertices"]
    index = {name: k for k, name in enumerate(names)}
    adj = [set() for _ in names]
    for a, b in doc["edges"]:
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])
    return names, [frozenset(s) for s in adj], doc
