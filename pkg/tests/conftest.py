import os
import random

import pytest

from wordrep.graphs import Graph

# Exhaustive variants of the heavy acceptance checks run when this is set;
# the default suite uses the sampled variants.
EXHAUSTIVE = bool(os.environ.get("WORDREP_EXHAUSTIVE"))


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return Graph(
        n,
        [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p],
    )


def random_split_graph(rng: random.Random, n: int, m: int | None = None) -> Graph:
    """A random split graph on n vertices: a clique 0..m-1 plus independent
    vertices with random clique neighbourhoods (proper subsets, so the
    clique stays maximal)."""
    if m is None:
        m = rng.randint(1, n)
    edges = [(u, v) for u in range(m) for v in range(u + 1, m)]
    for w in range(m, n):
        size = rng.randint(0, max(m - 1, 0))
        for c in rng.sample(range(m), size):
            edges.append((c, w))
    return Graph(n, edges)


@pytest.fixture(scope="session")
def rng() -> random.Random:
    return random.Random(20250808)
