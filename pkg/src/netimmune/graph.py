"""Immutable undirected simple graph with dense integer node ids.

Nodes are always 0..n-1 internally; original input labels (when a graph
comes from an edge-list file) are kept in a side table for output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Graph:
    """Undirected simple graph: no self-loops, no multi-edges.

    Node removal never mutates a Graph; callers either pass a removed-set
    to the query helpers below or build a masked copy via ``without_nodes``.
    """

    __slots__ = ("_adj", "_adj_sets", "_m", "_labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[int] | None = None):
        if n < 0:
            raise ValueError(f"node count must be >= 0, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj_sets: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self._adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in adj)
        self._m = sum(len(s) for s in adj) // 2
        if labels is not None:
            if len(labels) != n:
                raise ValueError("label table length must equal node count")
            self._labels = tuple(labels)
        else:
            self._labels = tuple(range(n))

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return self._m

    @property
    def labels(self) -> tuple[int, ...]:
        """Original node labels, indexed by dense id."""
        return self._labels

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj_sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Each edge once, endpoints ascending, in sorted order."""
        for u in range(len(self._adj)):
            for v in self._adj[u]:
                if u < v:
                    yield (u, v)

    def nodes(self) -> range:
        return range(len(self._adj))

    def without_nodes(self, removed: Iterable[int]) -> "Graph":
        """Copy with the given nodes isolated (all incident edges dropped).

        The node set is unchanged so ids and labels stay aligned with the
        original graph; removed nodes simply end up with degree 0.
        """
        gone = set(removed)
        kept = ((u, v) for u, v in self.edges() if u not in gone and v not in gone)
        return Graph(self.node_count, kept, labels=self._labels)

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"


@dataclass(frozen=True)
class GraphStats:
    """Headline statistics for a graph."""

    nodes: int
    edges: int
    max_degree: int
    clustering: float
    mean_degree: float
    mean_sq_degree: float
    epidemic_threshold: float  # nan when the graph has no edges


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def common_neighbors(g: Graph, u: int, v: int) -> int:
    """Number of shared one-hop neighbors of two distinct nodes.

    Neither endpoint can appear in the count in a simple graph, and the
    presence or absence of the edge (u, v) itself does not affect it.
    """
    if u == v:
        raise ValueError("common_neighbors requires two distinct nodes")
    a, b = g.neighbor_set(u), g.neighbor_set(v)
    if len(a) > len(b):
        a, b = b, a
    return len(a & b)


def lcc_size(g: Graph, removed: Iterable[int] = ()) -> int:
    """Largest connected component size after deleting ``removed`` nodes.

    Isolated survivors count as components of size 1; the result is 0 only
    when every node has been removed.
    """
    gone = set(removed)
    n = g.node_count
    seen = bytearray(n)
    best = 0
    for s in range(n):
        if seen[s] or s in gone:
            continue
        size = 0
        stack = [s]
        seen[s] = 1
        while stack:
            x = stack.pop()
            size += 1
            for w in g.neighbors(x):
                if not seen[w] and w not in gone:
                    seen[w] = 1
                    stack.append(w)
        best = max(best, size)
    return best


def lcc_curve(g: Graph, order: Sequence[int]) -> list[int]:
    """Largest-component size after each prefix of a removal order.

    Returns sizes [lcc after removing order[:1], ..., after order[:len]].
    Computed backwards with a union-find over re-insertions, so the whole
    curve costs about one graph traversal instead of one per step.
    """
    n = g.node_count
    seen = set(order)
    if len(seen) != len(order):
        raise ValueError("removal order contains duplicate nodes")

    parent = list(range(n))
    size = [1] * n
    present = [False] * n

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> int:
        ra, rb = find(a), find(b)
        if ra == rb:
            return size[ra]
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
        return size[ra]

    best = 0

    def insert(v: int) -> None:
        nonlocal best
        present[v] = True
        best = max(best, 1)
        for w in g.neighbors(v):
            if present[w]:
                best = max(best, union(v, w))

    for v in g.nodes():
        if v not in seen:
            insert(v)

    curve_rev = [best]
    for v in reversed(order[1:]):
        insert(v)
        curve_rev.append(best)
    curve_rev.reverse()
    return curve_rev


def stats(g: Graph) -> GraphStats:
    """Compute GraphStats; raises on an empty graph."""
    n = g.node_count
    if n == 0:
        raise ValueError("stats undefined for an empty graph")
    degs = [g.degree(v) for v in g.nodes()]
    mean_k = sum(degs) / n
    mean_k2 = sum(d * d for d in degs) / n
    lam_c = mean_k / mean_k2 if mean_k2 > 0 else math.nan
    return GraphStats(
        nodes=n,
        edges=g.edge_count,
        max_degree=max(degs),
        clustering=_mean_clustering(g),
        mean_degree=mean_k,
        mean_sq_degree=mean_k2,
        epidemic_threshold=lam_c,
    )


def _mean_clustering(g: Graph) -> float:
    """Mean local clustering; degree-0/1 nodes contribute 0 to the mean."""
    n = g.node_count
    total = 0.0
    for v in g.nodes():
        nbrs = g.neighbors(v)
        d = len(nbrs)
        if d < 2:
            continue
        links = 0
        for i in range(d):
            wi_set = g.neighbor_set(nbrs[i])
            for j in range(i + 1, d):
                if nbrs[j] in wi_set:
                    links += 1
        total += 2.0 * links / (d * (d - 1))
    return total / n
