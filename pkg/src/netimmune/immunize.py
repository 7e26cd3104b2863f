"""Adaptive immunization: score, pick a batch, delete, rescore.

The engine removes ceil(q*N) nodes from a graph, recomputing centrality
scores on the residual graph after every ceil(batch_fraction*N) picks
(default 5%). Within a batch, picks honor neighbor exclusion: a node
adjacent to an earlier pick of the same batch is skipped, falling back
to the plain highest-score unremoved node when exclusion leaves nothing
(fallback events are counted and reported). For the svid method the
within-batch discount update also runs between rescores. The largest-
component fraction s(Q), relative to the original node count, is
recorded after every single removal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .baselines import (CentralityMethod, betweenness_scores, coreness_scores,
                        degree_scores, eigenvector_scores)
from .graph import Graph, lcc_curve
from .shapley import SvidOptions, _svid_select

DEFAULT_BATCH_FRACTION = 0.05


@dataclass(frozen=True)
class StrategyConfig:
    method: CentralityMethod
    q: float = 1.0
    batch_fraction: float = DEFAULT_BATCH_FRACTION
    neighbor_exclusion: bool = True
    svid: SvidOptions = SvidOptions()

    def __post_init__(self) -> None:
        if not 0.0 < self.q <= 1.0:
            raise ValueError(f"q must be in (0, 1], got {self.q}")
        if not 0.0 < self.batch_fraction <= 1.0:
            raise ValueError(
                f"batch_fraction must be in (0, 1], got {self.batch_fraction}")


@dataclass(frozen=True)
class ImmunizationPlan:
    """Removal order plus the component-collapse curve it produced.

    s_curve[i] is the largest-component size after removing order[:i+1],
    divided by the original node count. Singleton survivors count as
    size-1 components, so s hits 0 only when every node is gone.
    """

    method: str
    n_nodes: int
    order: tuple[int, ...]
    s_curve: tuple[float, ...]
    fallback_steps: tuple[int, ...]
    q: float
    batch_size: int
    neighbor_exclusion: bool

    @property
    def fallback_count(self) -> int:
        return len(self.fallback_steps)


def run_strategy(g: Graph, cfg: StrategyConfig) -> ImmunizationPlan:
    """Remove ceil(q*N) nodes adaptively; returns the plan with its s-curve."""
    n = g.node_count
    if n == 0:
        raise ValueError("cannot immunize an empty graph")
    target = min(n, math.ceil(cfg.q * n))
    batch = max(1, math.ceil(cfg.batch_fraction * n))

    order: list[int] = []
    fallback_steps: list[int] = []
    remaining = np.ones(n, dtype=bool)

    while len(order) < target:
        residual = g.without_nodes(order)
        take = min(batch, target - len(order))
        base = len(order)
        if cfg.method is CentralityMethod.SVID:
            pool = [int(v) for v in np.flatnonzero(remaining)]
            picks, fbs = _svid_select(residual, take, cfg.svid,
                                      candidates=pool,
                                      exclude_neighbors=cfg.neighbor_exclusion)
        else:
            picks, fbs = _pick_batch(residual, cfg, remaining, take)
        for v in picks:
            remaining[v] = False
        order.extend(picks)
        fallback_steps.extend(base + i for i in fbs)

    sizes = lcc_curve(g, order)
    return ImmunizationPlan(
        method=cfg.method.value,
        n_nodes=n,
        order=tuple(order),
        s_curve=tuple(sz / n for sz in sizes),
        fallback_steps=tuple(fallback_steps),
        q=cfg.q,
        batch_size=batch,
        neighbor_exclusion=cfg.neighbor_exclusion,
    )


def full_ordering(g: Graph, cfg: StrategyConfig) -> ImmunizationPlan:
    """run_strategy over the whole graph (q forced to 1); the input for
    robustness scoring."""
    return run_strategy(g, replace(cfg, q=1.0))


def _pick_batch(residual: Graph, cfg: StrategyConfig,
                remaining: np.ndarray, take: int) -> tuple[list[int], list[int]]:
    """One batch of non-svid picks: scores are frozen for the batch, the
    exclusion set grows with every pick."""
    key = _selection_key(residual, cfg.method)
    excluded = np.zeros(residual.node_count, dtype=bool)
    live = remaining.copy()
    picks: list[int] = []
    fallbacks: list[int] = []
    for step in range(take):
        masked = np.where(live & ~excluded, key, -np.inf)
        choice = int(np.argmax(masked))
        if masked[choice] == -np.inf:
            masked = np.where(live, key, -np.inf)
            choice = int(np.argmax(masked))
            fallbacks.append(step)
        picks.append(choice)
        live[choice] = False
        if cfg.neighbor_exclusion:
            for w in residual.neighbors(choice):
                excluded[w] = True
    return picks, fallbacks


def _selection_key(residual: Graph, method: CentralityMethod) -> np.ndarray:
    """Score array used for argmax picking; np.argmax takes the first
    (lowest-id) index on ties, which is the tie-break contract."""
    if method is CentralityMethod.DEGREE:
        return degree_scores(residual).theta
    if method is CentralityMethod.BETWEENNESS:
        return betweenness_scores(residual).theta
    if method is CentralityMethod.EIGENVECTOR:
        if residual.edge_count == 0:
            return np.zeros(residual.node_count)
        return eigenvector_scores(residual).theta
    if method is CentralityMethod.CORENESS:
        # core number alone; the coarse ties fall through to argmax's
        # lowest-id pick like every other method
        return coreness_scores(residual).theta
    raise ValueError(f"no selection key for method {method}")
