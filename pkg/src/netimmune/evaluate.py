"""Robustness and fragmentation metrics over immunization plans."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .immunize import ImmunizationPlan


@dataclass(frozen=True)
class RobustnessResult:
    r_value: float
    plan: ImmunizationPlan


@dataclass(frozen=True)
class FqTable:
    """Aligned largest-component fractions: one q per removal step, one
    column per plan."""

    q: tuple[float, ...]
    columns: dict[str, tuple[float, ...]]


def robustness(plan: ImmunizationPlan) -> RobustnessResult:
    """R = (1/N) * sum of s(Q) over Q = 1..N; needs a full ordering.

    Exact discrete sum, no integral approximation. Always strictly below
    (N-1)/(2N) + 1/N.
    """
    n = plan.n_nodes
    if len(plan.order) != n:
        raise ValueError(
            f"robustness needs a full ordering: plan removes "
            f"{len(plan.order)} of {n} nodes")
    return RobustnessResult(r_value=math.fsum(plan.s_curve) / n, plan=plan)


def f_q_curve(plans: Sequence[ImmunizationPlan]) -> FqTable:
    """Align plans from the same graph into one (q, f per method) table."""
    if not plans:
        raise ValueError("need at least one plan")
    n = plans[0].n_nodes
    steps = len(plans[0].order)
    for p in plans[1:]:
        if p.n_nodes != n:
            raise ValueError("plans come from graphs of different sizes")
        if len(p.order) != steps:
            raise ValueError("plans cover different numbers of removals")

    columns: dict[str, tuple[float, ...]] = {}
    for p in plans:
        label = p.method
        k = 2
        while label in columns:
            label = f"{p.method}_{k}"
            k += 1
        columns[label] = p.s_curve
    q = tuple((i + 1) / n for i in range(steps))
    return FqTable(q=q, columns=columns)


def collapse_point(plan: ImmunizationPlan, threshold: float) -> float | None:
    """Smallest removed fraction q at which s(Q) <= threshold, or None if
    the plan never gets there."""
    for i, f in enumerate(plan.s_curve):
        if f <= threshold:
            return (i + 1) / plan.n_nodes
    return None
