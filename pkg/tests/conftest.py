"""Shared fixtures and independent reference oracles.

The reference implementations here deliberately avoid the library's bitset
paths: balance is recomputed from dict-of-set adjacency so that library and
oracle can only agree by both being right.
"""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from balanced_coloring import Graph


def ref_neighbor_sets(g: Graph) -> dict[int, set[int]]:
    nbrs: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges():
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def ref_balanced(g: Graph, red_mask: int, mode: str) -> bool:
    """Set-based rebuild of the balance condition."""
    nbrs = ref_neighbor_sets(g)
    reds = {v for v in range(g.n) if (red_mask >> v) & 1}
    for v in range(g.n):
        hood = set(nbrs[v])
        if mode == "cnb":
            hood.add(v)
        r = len(hood & reds)
        if 2 * r != len(hood):
            return False
    return True


def brute_force_masks(g: Graph, mode: str) -> list[int]:
    """All balanced colorings by exhausting the 2^n assignments."""
    return [m for m in range(1 << g.n) if ref_balanced(g, m, mode)]


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


# H6: the unique 6-vertex balanced tree, labeled z1=0, z2=1, v=2, x=3,
# w1=4, w2=5 (one 4-vertex addition to the edge 0-1 at vertex 0).
H6_EDGES = [(0, 1), (0, 2), (0, 3), (2, 4), (2, 5)]

# H7: 3-vertex addition to the edgeless graph on {0,1,2,3} colored RRBB;
# u=4 joins all four anchors, a1=5 joins 0 and 2, a2=6 joins 1 and 3.
H7_EDGES = [(4, 0), (4, 1), (4, 2), (4, 3), (5, 0), (5, 2), (6, 1), (6, 3)]
H7_COLORING = "RRBBBRR"


@pytest.fixture
def h6() -> Graph:
    return Graph.from_edges(6, H6_EDGES)


@pytest.fixture
def h7() -> Graph:
    return Graph.from_edges(7, H7_EDGES)
