import random
from pathlib import Path

import pytest

import levgraph as lg

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"

# The worked three-account transfer example: an increasing path 1 -> 3 -> 2
# exists (100 < 300) while 1 -> 2 with 600 cannot be extended via 2 -> 3
# with 400.
FIG_TSV = "1\t3\t100\n3\t2\t300\n1\t2\t600\n2\t3\t400\n"


@pytest.fixture
def fig_graph():
    return lg.parse_graph(FIG_TSV, "tsv")


@pytest.fixture
def fig_leveled(fig_graph):
    return lg.build_leveled(fig_graph)


@pytest.fixture
def fig_json_path():
    return DATA_DIR / "fig1.json"


def random_graph(rng: random.Random, max_nodes: int = 12, max_edges: int = 36):
    """Small random multigraph with self-loops, parallel edges, and value
    pools chosen small enough to force duplicate edge values."""
    n = rng.randint(2, max_nodes)
    m = rng.randint(0, max_edges)
    pool = rng.choice([3, 5, 8, 12, 20])
    edges = []
    for _ in range(m):
        src = str(rng.randrange(n))
        tgt = str(rng.randrange(n))
        edges.append((src, tgt, float(rng.randint(1, pool))))
    return lg.graph_from_edges(edges, extra_nodes=[str(i) for i in range(n)])
