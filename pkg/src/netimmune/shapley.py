"""Shapley-style node scores and adaptive greedy selection.

Two scorers live here. ``spin_shapley`` is the closed form for the
single-node sphere-of-influence game: theta(v) = sum of 1/(1+deg(u))
over v and its neighbors. ``svid_scores`` works edge by edge: an edge
whose endpoints share K one-hop neighbors pays 1/((K+1)(K+2)) to each
endpoint, which is the fraction of uniformly random join orders of the
K+2 involved nodes in which one endpoint arrives first and the other
second, before all K shared neighbors. Edges inside dense overlapping
neighborhoods are therefore worth little, and bridge-like edges a lot.

``exact_shapley`` is the brute-force subset-enumeration oracle used to
validate the closed forms on small graphs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping

import numpy as np

from .graph import Graph


@dataclass(frozen=True)
class ScoreVector:
    """Per-node scores, indexed by dense node id."""

    theta: np.ndarray
    method: str
    meta: Mapping[str, object] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", np.asarray(self.theta, dtype=float))


@dataclass(frozen=True)
class SvidOptions:
    """hops=1 counts shared direct neighbors; hops=2 widens each
    endpoint's side to everything within two hops (scored edge removed,
    endpoints excluded) before intersecting."""

    hops: int = 1

    def __post_init__(self) -> None:
        if self.hops not in (1, 2):
            raise ValueError(f"hops must be 1 or 2, got {self.hops}")


@dataclass(frozen=True)
class CoalitionGame:
    """Cooperative game on players 0..n_players-1 with value(empty) = 0."""

    n_players: int
    value: Callable[[frozenset[int]], float]


def ordering_probability(k_common: int) -> float:
    """Probability weight for an edge whose endpoints share k_common
    neighbors: 1/((K+1)(K+2))."""
    if k_common < 0:
        raise ValueError(f"common-neighbor count must be >= 0, got {k_common}")
    return 1.0 / ((k_common + 1) * (k_common + 2))


def svid_scores(g: Graph, opts: SvidOptions = SvidOptions()) -> ScoreVector:
    """Edge-wise delimiter scores; both endpoints of every edge gain that
    edge's ordering probability. Nodes with no edges score 0."""
    theta, _ = _svid_scores_with_contribs(g, opts)
    return ScoreVector(theta=theta, method="svid", meta={"hops": opts.hops})


def _svid_scores_with_contribs(
    g: Graph, opts: SvidOptions
) -> tuple[np.ndarray, dict[tuple[int, int], float]]:
    """Score pass that also returns each edge's contribution, keyed by
    (min, max) endpoint pair, for the discount step of adaptive selection."""
    theta = np.zeros(g.node_count, dtype=float)
    contribs: dict[tuple[int, int], float] = {}
    for u, v in g.edges():
        if opts.hops == 1:
            k = _shared_one_hop(g, u, v)
        else:
            k = len(_two_hop_side(g, u, v) & _two_hop_side(g, v, u))
        w = ordering_probability(k)
        contribs[(u, v)] = w
        theta[u] += w
        theta[v] += w
    return theta, contribs


def _shared_one_hop(g: Graph, u: int, v: int) -> int:
    a, b = g.neighbor_set(u), g.neighbor_set(v)
    if len(a) > len(b):
        a, b = b, a
    return len(a & b)


def _two_hop_side(g: Graph, src: int, other: int) -> set[int]:
    """Nodes within two hops of src with the edge (src, other) removed;
    excludes both endpoints."""
    first = [w for w in g.neighbors(src) if w != other]
    out = set(first)
    for w in first:
        out.update(g.neighbors(w))
    out.discard(src)
    out.discard(other)
    return out


def spin_shapley(g: Graph) -> ScoreVector:
    """Closed-form Shapley value of the sphere-of-influence (fringe) game:
    theta(v) = sum over u in {v} + N(v) of 1/(1 + deg(u))."""
    inv = np.array([1.0 / (1 + g.degree(v)) for v in g.nodes()])
    theta = inv.copy()
    for v in g.nodes():
        for w in g.neighbors(v):
            theta[v] += inv[w]
    return ScoreVector(theta=theta, method="spin")


def fringe_game(g: Graph) -> CoalitionGame:
    """value(C) = |C together with every node within one edge of C|."""

    def value(coalition: frozenset[int]) -> float:
        if not coalition:
            return 0.0
        covered = set(coalition)
        for v in coalition:
            covered.update(g.neighbors(v))
        return float(len(covered))

    return CoalitionGame(n_players=g.node_count, value=value)


def neighbors_game(g: Graph) -> CoalitionGame:
    """value(C) = |union of the members' neighbor sets| (members count
    only if some other member is adjacent to them)."""

    def value(coalition: frozenset[int]) -> float:
        covered: set[int] = set()
        for v in coalition:
            covered.update(g.neighbors(v))
        return float(len(covered))

    return CoalitionGame(n_players=g.node_count, value=value)


def exact_shapley(game: CoalitionGame) -> np.ndarray:
    """Exact Shapley values by full subset enumeration.

    theta(i) = sum over coalitions C not containing i of
    |C|! (n-|C|-1)! / n! * (value(C+i) - value(C)). Exponential in the
    player count, so capped at 12 players.
    """
    n = game.n_players
    if n < 1:
        raise ValueError("game needs at least one player")
    if n > 12:
        raise ValueError(f"exact enumeration capped at 12 players, got {n}")

    fact = [math.factorial(i) for i in range(n + 1)]
    weight = [fact[s] * fact[n - s - 1] / fact[n] for s in range(n)]

    values = np.empty(1 << n, dtype=float)
    for mask in range(1 << n):
        members = frozenset(i for i in range(n) if mask >> i & 1)
        values[mask] = game.value(members)
    if values[0] != 0.0:
        raise ValueError("characteristic function must map the empty "
                         "coalition to 0")

    theta = np.zeros(n, dtype=float)
    for mask in range(1 << n):
        size = mask.bit_count()
        for i in range(n):
            if not mask >> i & 1:
                theta[i] += weight[size] * (values[mask | 1 << i] - values[mask])
    return theta


def svid_adaptive_select(
    g: Graph,
    k: int,
    opts: SvidOptions = SvidOptions(),
    candidates: Iterable[int] | None = None,
) -> list[int]:
    """Pick k nodes greedily by svid score with neighbor exclusion.

    After each pick, every edge incident to the picked node's neighbors
    has its contribution subtracted from the far endpoint's score, so the
    neighborhood's value is discounted before the next pick. Nodes
    adjacent to an earlier pick are skipped; if that leaves no eligible
    node, the highest-scoring unpicked node is taken instead (fallback).
    Ties always resolve to the lowest node id.
    """
    order, _ = _svid_select(g, k, opts, candidates)
    return order


def _svid_select(
    g: Graph,
    k: int,
    opts: SvidOptions = SvidOptions(),
    candidates: Iterable[int] | None = None,
    exclude_neighbors: bool = True,
) -> tuple[list[int], list[int]]:
    """svid_adaptive_select plus the list of fallback step indices."""
    n = g.node_count
    pool = list(g.nodes()) if candidates is None else sorted(set(candidates))
    if not 1 <= k <= len(pool):
        raise ValueError(f"k={k} outside 1..{len(pool)} candidate nodes")

    theta, contribs = _svid_scores_with_contribs(g, opts)
    remaining = np.zeros(n, dtype=bool)
    remaining[pool] = True
    excluded = np.zeros(n, dtype=bool)

    order: list[int] = []
    fallbacks: list[int] = []
    neg_inf = -np.inf
    for step in range(k):
        masked = np.where(remaining & ~excluded, theta, neg_inf)
        pick = int(np.argmax(masked))
        if masked[pick] == neg_inf:
            masked = np.where(remaining, theta, neg_inf)
            pick = int(np.argmax(masked))
            fallbacks.append(step)
        order.append(pick)
        remaining[pick] = False
        if exclude_neighbors:
            for w in g.neighbors(pick):
                excluded[w] = True
        for u in g.neighbors(pick):
            for v in g.neighbors(u):
                key = (u, v) if u < v else (v, u)
                theta[v] -= contribs[key]
    return order, fallbacks
