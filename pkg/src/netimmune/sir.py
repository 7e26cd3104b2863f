"""Discrete-time SIR epidemics on a graph, with ensemble statistics.

Time advances synchronously: in each step every currently infected node
first tries to infect each of its still-susceptible neighbors (each
contact independently succeeds with probability lambda), then recovers
with probability sigma. Nodes infected during a step cannot recover in
that same step. Immunized nodes are absent: they are never infected,
never transmit, and are not counted in the population that densities are
normalized by.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, stats

_S, _I, _R, _IMMUNE = 0, 1, 2, 3


@dataclass(frozen=True)
class SirParams:
    infection_rate: float
    recovery_rate: float
    initial_infected: int = 1
    runs: int = 50
    master_seed: int = 0
    max_steps: int = 10_000

    def __post_init__(self) -> None:
        if not 0.0 <= self.infection_rate <= 1.0:
            raise ValueError(f"infection rate must be a probability, "
                             f"got {self.infection_rate}")
        if not 0.0 <= self.recovery_rate <= 1.0:
            raise ValueError(f"recovery rate must be a probability, "
                             f"got {self.recovery_rate}")
        if self.initial_infected < 1:
            raise ValueError("need at least one initially infected node")
        if self.runs < 1:
            raise ValueError("need at least one run")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")


@dataclass(frozen=True)
class SirTrace:
    """Counts per step (index 0 is the initial state). ``active`` is the
    non-immunized population that densities divide by."""

    s_counts: np.ndarray
    i_counts: np.ndarray
    r_counts: np.ndarray
    active: int
    extinct: bool
    state_history: tuple[bytes, ...] | None = None

    @property
    def s(self) -> np.ndarray:
        return self.s_counts / self.active

    @property
    def i(self) -> np.ndarray:
        return self.i_counts / self.active

    @property
    def r(self) -> np.ndarray:
        return self.r_counts / self.active

    @property
    def steps_to_extinction(self) -> int:
        return len(self.i_counts) - 1

    @property
    def steady_state_recovered(self) -> int:
        """|r|: absolute count of ever-infected nodes at the end."""
        return int(self.r_counts[-1])


@dataclass(frozen=True)
class SirEnsemble:
    """Per-step mean/std densities over runs, traces padded to the longest
    run by repeating the absorbing final state."""

    t: np.ndarray
    s_mean: np.ndarray
    i_mean: np.ndarray
    r_mean: np.ndarray
    s_std: np.ndarray
    i_std: np.ndarray
    r_std: np.ndarray
    r_abs_mean: float
    r_abs_std: float
    runs: int
    active: int


def sir_run(
    g: Graph,
    immunized: Iterable[int],
    params: SirParams,
    run_seed: int | np.random.SeedSequence,
    *,
    initial_infected_nodes: Sequence[int] | None = None,
    record_states: bool = False,
) -> SirTrace:
    """One stochastic epidemic; fully determined by run_seed.

    The initially infected nodes are drawn uniformly from the active
    population unless ``initial_infected_nodes`` pins them explicitly.
    Per-step draw order is fixed (infected nodes in ascending id order,
    their neighbors in ascending order) so traces are reproducible.
    """
    status = np.zeros(g.node_count, dtype=np.uint8)
    for v in immunized:
        status[v] = _IMMUNE
    active_ids = [v for v in g.nodes() if status[v] != _IMMUNE]
    active = len(active_ids)
    if active == 0:
        raise ValueError("no active nodes left to simulate")

    rng = np.random.Generator(np.random.PCG64(run_seed))

    if initial_infected_nodes is not None:
        seeds = sorted(set(initial_infected_nodes))
        if any(status[v] == _IMMUNE for v in seeds):
            raise ValueError("cannot seed infection on an immunized node")
    else:
        if params.initial_infected > active:
            raise ValueError(
                f"initial infected {params.initial_infected} exceeds active "
                f"population {active}")
        picked = rng.choice(len(active_ids), size=params.initial_infected,
                            replace=False)
        seeds = sorted(active_ids[int(i)] for i in picked)
    for v in seeds:
        status[v] = _I

    infected = list(seeds)
    s_hist = [active - len(infected)]
    i_hist = [len(infected)]
    r_hist = [0]
    history = [status.tobytes()] if record_states else None

    lam = params.infection_rate
    sigma = params.recovery_rate
    steps = 0
    while infected and steps < params.max_steps:
        contacts: list[int] = []
        for u in infected:
            for w in g.neighbors(u):
                if status[w] == _S:
                    contacts.append(w)
        newly: set[int] = set()
        if contacts:
            hits = rng.random(len(contacts)) < lam
            newly = {contacts[k] for k in range(len(contacts)) if hits[k]}
        recov = rng.random(len(infected)) < sigma

        still = [infected[k] for k in range(len(infected)) if not recov[k]]
        for k, u in enumerate(infected):
            if recov[k]:
                status[u] = _R
        for w in newly:
            status[w] = _I
        infected = sorted(still + list(newly))
        steps += 1

        i_hist.append(len(infected))
        r_hist.append(int(np.count_nonzero(status == _R)))
        s_hist.append(active - i_hist[-1] - r_hist[-1])
        if history is not None:
            history.append(status.tobytes())

    return SirTrace(
        s_counts=np.array(s_hist),
        i_counts=np.array(i_hist),
        r_counts=np.array(r_hist),
        active=active,
        extinct=not infected,
        state_history=tuple(history) if history is not None else None,
    )


def sir_ensemble(
    g: Graph,
    immunized: Iterable[int],
    params: SirParams,
) -> SirEnsemble:
    """Independent runs with per-run seeds split off the master seed via
    SeedSequence.spawn; results do not depend on execution order."""
    frozen = list(immunized)
    children = np.random.SeedSequence(params.master_seed).spawn(params.runs)
    traces = [sir_run(g, frozen, params, child) for child in children]

    length = max(len(tr.i_counts) for tr in traces)
    active = traces[0].active

    def padded(tr: SirTrace, arr: np.ndarray) -> np.ndarray:
        pad = length - len(arr)
        if pad == 0:
            return arr / active
        return np.concatenate([arr, np.full(pad, arr[-1])]) / active

    s_all = np.stack([padded(tr, tr.s_counts) for tr in traces])
    i_all = np.stack([padded(tr, tr.i_counts) for tr in traces])
    r_all = np.stack([padded(tr, tr.r_counts) for tr in traces])
    r_abs = np.array([tr.steady_state_recovered for tr in traces], dtype=float)

    return SirEnsemble(
        t=np.arange(length),
        s_mean=s_all.mean(axis=0), i_mean=i_all.mean(axis=0),
        r_mean=r_all.mean(axis=0),
        s_std=s_all.std(axis=0), i_std=i_all.std(axis=0),
        r_std=r_all.std(axis=0),
        r_abs_mean=float(r_abs.mean()), r_abs_std=float(r_abs.std()),
        runs=params.runs, active=active,
    )


def epidemic_threshold(g: Graph) -> float:
    """Mean-field threshold <k>/<k^2>; undefined without edges."""
    if g.edge_count == 0:
        raise ValueError("epidemic threshold undefined for an edgeless graph")
    st = stats(g)
    return st.mean_degree / st.mean_sq_degree
