"""Shared graph builders for the test suite."""

from __future__ import annotations

import numpy as np

from netimmune import Graph, erdos_renyi, lcc_size


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """Center is node 0."""
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def barbell_graph() -> Graph:
    """Two K4s joined by the bridge (3, 4)."""
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(i, j) for i in range(4, 8) for j in range(i + 1, 8)]
    edges.append((3, 4))
    return Graph(8, edges)


def random_graph(seed: int, max_n: int = 30) -> Graph:
    """Small random graph with size and density drawn from the seed."""
    rng = np.random.Generator(np.random.PCG64(seed))
    n = int(rng.integers(2, max_n + 1))
    max_m = n * (n - 1) // 2
    m = int(rng.integers(0, max_m + 1))
    return erdos_renyi(n, m, int(rng.integers(0, 2**31)))


def random_connected_graph(seed: int, n: int) -> Graph:
    rng = np.random.Generator(np.random.PCG64(seed))
    max_m = n * (n - 1) // 2
    while True:
        m = int(rng.integers(n - 1, max_m + 1))
        g = erdos_renyi(n, m, int(rng.integers(0, 2**31)))
        if lcc_size(g) == n:
            return g
