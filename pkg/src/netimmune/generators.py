"""Seeded model-network generators.

Both generators are deterministic functions of their seed: the same
(family, n, m or m0, seed) always yields the same edge list, byte for
byte, which is what makes run manifests replayable. All randomness comes
from numpy's PCG64 stream seeded explicitly; there is no hidden entropy.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

ER_DEFAULT = (5000, 10000)  # mean degree 4.0
BA_DEFAULT = (5000, 2)


@dataclass(frozen=True)
class GenSpec:
    """Generator request: family "er" uses (n, m), family "ba" uses (n, m0)."""

    family: str
    n: int
    m: int  # edge target for er, edges-per-arrival m0 for ba

    def __post_init__(self) -> None:
        if self.family not in ("er", "ba"):
            raise ValueError(f"unknown generator family {self.family!r}")


def generate(spec: GenSpec, seed: int) -> Graph:
    if spec.family == "er":
        return erdos_renyi(spec.n, spec.m, seed)
    return barabasi_albert(spec.n, spec.m, seed)


def erdos_renyi(n: int, m: int, seed: int) -> Graph:
    """G(n, m): uniform over simple graphs with exactly m edges.

    Args:
        n: number of nodes.
        m: number of edges; must fit in n*(n-1)/2.
        seed: PRNG seed.

    Draws edge indices without replacement from the n*(n-1)/2 possible
    pairs (rejection sampling; the complement is sampled instead when m
    is more than half the maximum, so dense requests stay fast).
    """
    if n < 1:
        raise ValueError(f"er generator needs n >= 1, got {n}")
    max_m = n * (n - 1) // 2
    if not 0 <= m <= max_m:
        raise ValueError(f"er edge count {m} outside [0, {max_m}] for n={n}")
    rng = np.random.Generator(np.random.PCG64(seed))

    take_complement = m > max_m // 2
    k = max_m - m if take_complement else m
    chosen: set[int] = set()
    while len(chosen) < k:
        # draw in chunks; duplicates and rejects just roll into the next round
        need = k - len(chosen)
        for idx in rng.integers(0, max_m, size=max(64, 2 * need)):
            chosen.add(int(idx))
            if len(chosen) == k:
                break
    if take_complement:
        chosen = set(range(max_m)) - chosen

    edges = [_pair_from_index(i, n) for i in sorted(chosen)]
    return Graph(n, edges)


def _pair_from_index(idx: int, n: int) -> tuple[int, int]:
    """Decode a flat index over all u<v pairs into the pair itself."""
    # row u starts at offset u*n - u*(u+1)/2 within the flattened triangle
    u = 0
    row = n - 1
    while idx >= row:
        idx -= row
        u += 1
        row -= 1
    return (u, u + 1 + idx)


def barabasi_albert(n: int, m0: int, seed: int) -> Graph:
    """Preferential-attachment graph grown from a clique seed.

    Starts from a complete graph on m0+1 nodes; every later node attaches
    to m0 distinct existing nodes picked proportionally to degree. Total
    edge count is exactly (m0+1)*m0/2 + (n-m0-1)*m0.

    Args:
        n: final node count; must exceed m0 + 1.
        m0: edges added per arriving node, >= 1.
        seed: PRNG seed.
    """
    if m0 < 1:
        raise ValueError(f"ba generator needs m0 >= 1, got {m0}")
    if n <= m0 + 1:
        raise ValueError(f"ba generator needs n > m0 + 1, got n={n}, m0={m0}")
    rng = np.random.Generator(np.random.PCG64(seed))

    edges: list[tuple[int, int]] = []
    # one entry per edge endpoint, so sampling it is degree-proportional
    endpoint_pool: list[int] = []
    core = m0 + 1
    for u in range(core):
        for v in range(u + 1, core):
            edges.append((u, v))
            endpoint_pool.append(u)
            endpoint_pool.append(v)

    for new in range(core, n):
        targets: set[int] = set()
        while len(targets) < m0:
            targets.add(endpoint_pool[int(rng.integers(0, len(endpoint_pool)))])
        for t in sorted(targets):
            edges.append((t, new))
            endpoint_pool.append(t)
            endpoint_pool.append(new)

    return Graph(n, edges)
