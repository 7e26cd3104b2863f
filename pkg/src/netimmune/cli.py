"""Command-line interface.

Sub-commands: stats, rank, immunize, sir, compare, replay. Every run
that writes outputs also writes a manifest.json capturing the resolved
parameters; ``netimmune replay manifest.json --out DIR`` reruns it and
produces byte-identical files. Commands that involve randomness (--gen,
sir, compare) refuse to run without an explicit --seed.

Exit codes: 0 ok, 2 usage, 3 input parse error, 4 invalid configuration
or domain error, 5 unexpected runtime failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Sequence

from . import __version__
from .baselines import (CentralityMethod, betweenness_scores, coreness_scores,
                        degree_scores, eigenvector_scores)
from .edgelist import EdgeListParseError, read_edge_list_with_report
from .evaluate import f_q_curve, robustness
from .generators import BA_DEFAULT, ER_DEFAULT, GenSpec, generate
from .graph import Graph, stats
from .immunize import ImmunizationPlan, StrategyConfig, full_ordering, run_strategy
from .shapley import ScoreVector, SvidOptions, svid_scores
from .sir import SirParams, sir_ensemble

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_CONFIG = 4
EXIT_RUNTIME = 5

METHOD_TAGS = ("da", "bwa", "eva", "cna", "svida")

_MANIFEST_KEYS = {
    "stats": ("input", "gen", "seed"),
    "rank": ("input", "gen", "seed", "method", "hops"),
    "immunize": ("input", "gen", "seed", "method", "hops", "q", "batch",
                 "neighbor_exclusion"),
    "sir": ("input", "gen", "seed", "lam", "sigma", "runs", "i0",
            "max_steps", "plan", "method", "q", "batch", "hops",
            "neighbor_exclusion"),
    "compare": ("input", "gen", "seed", "methods", "q_grid", "lam", "sigma",
                "runs", "i0", "max_steps", "batch", "hops",
                "neighbor_exclusion"),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return ns.handler(ns)
    except (EdgeListParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="netimmune",
        description="Rank, immunize, and stress-test networks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    source = argparse.ArgumentParser(add_help=False)
    grp = source.add_mutually_exclusive_group(required=True)
    grp.add_argument("--input", help="edge-list file")
    grp.add_argument("--gen", type=_validate_gen,
                     help="model graph: er[:n,m] or ba[:n,m0]")
    source.add_argument("--seed", type=int, default=None,
                        help="PRNG seed (required for stochastic commands)")
    source.add_argument("--out", default=None, help="output directory")
    source.add_argument("--plot", action="store_true",
                        help="also write SVG plots (needs matplotlib)")

    p = sub.add_parser("stats", parents=[source],
                       help="print headline graph statistics")
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("rank", parents=[source],
                       help="score every node with one method")
    _add_method(p)
    _add_hops(p)
    p.set_defaults(handler=cmd_rank)

    p = sub.add_parser("immunize", parents=[source],
                       help="adaptively remove the top fraction q")
    _add_method(p)
    _add_strategy(p)
    p.set_defaults(handler=cmd_immunize)

    p = sub.add_parser("sir", parents=[source],
                       help="run an SIR ensemble, optionally immunized")
    p.add_argument("--plan", default=None,
                   help="plan CSV whose nodes are immunized before the runs")
    p.add_argument("--method", choices=METHOD_TAGS, default=None,
                   help="immunize inline with this method before the runs")
    _add_strategy(p, q_default=0.15)
    _add_sir(p)
    p.set_defaults(handler=cmd_sir)

    p = sub.add_parser("compare", parents=[source],
                       help="full pipeline: orderings, robustness, SIR")
    p.add_argument("--methods", default=",".join(METHOD_TAGS),
                   help="comma-separated method tags (default: all)")
    p.add_argument("--q-grid", dest="q_grid", default="0.15",
                   help="comma-separated removal fractions for the SIR arms")
    _add_strategy(p, with_q=False)
    _add_sir(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("replay", help="rerun a manifest byte-identically")
    p.add_argument("manifest", help="path to a manifest.json")
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(handler=cmd_replay)

    return parser


def _add_method(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=METHOD_TAGS, required=True)


def _add_hops(p: argparse.ArgumentParser) -> None:
    p.add_argument("--hops", type=int, choices=(1, 2), default=1,
                   help="neighborhood radius for the svid scorer")


def _add_strategy(p: argparse.ArgumentParser, q_default: float = 1.0,
                  with_q: bool = True) -> None:
    if with_q:
        p.add_argument("--q", type=float, default=q_default,
                       help="fraction of nodes to remove")
    p.add_argument("--batch", type=float, default=0.05,
                   help="rescore after this fraction of removals")
    _add_hops(p)
    p.add_argument("--no-neighbor-exclusion", dest="neighbor_exclusion",
                   action="store_false", default=True)


def _add_sir(p: argparse.ArgumentParser) -> None:
    p.add_argument("--lambda", dest="lam", type=float, required=True,
                   help="per-contact infection probability")
    p.add_argument("--sigma", type=float, required=True,
                   help="per-step recovery probability")
    p.add_argument("--runs", type=int, default=50)
    p.add_argument("--i0", type=int, default=1,
                   help="initially infected count")
    p.add_argument("--max-steps", dest="max_steps", type=int, default=10_000)


def _validate_gen(text: str) -> str:
    try:
        _parse_gen(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return text


def _parse_gen(text: str) -> GenSpec:
    family, _, rest = text.partition(":")
    family = family.strip().lower()
    if family not in ("er", "ba"):
        raise ValueError(f"unknown generator family {family!r}")
    if not rest:
        n, m = ER_DEFAULT if family == "er" else BA_DEFAULT
        return GenSpec(family, n, m)
    parts = rest.split(",")
    if len(parts) != 2:
        raise ValueError(f"generator spec needs two parameters, got {text!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"generator parameters must be integers: {text!r}") \
            from None
    return GenSpec(family, n, m)


def _load_graph(ns: argparse.Namespace) -> tuple[Graph, str]:
    if getattr(ns, "gen", None):
        if ns.seed is None:
            raise ValueError("--seed is required when generating a graph")
        spec = _parse_gen(ns.gen)
        return generate(spec, ns.seed), ns.gen
    g, report = read_edge_list_with_report(ns.input)
    if report.duplicates_dropped or report.self_loops_dropped:
        print(f"note: dropped {report.duplicates_dropped} duplicate edge(s) "
              f"and {report.self_loops_dropped} self-loop(s)", file=sys.stderr)
    return g, ns.input


def _require_seed(ns: argparse.Namespace) -> int:
    if ns.seed is None:
        raise ValueError("--seed is required for stochastic commands")
    return ns.seed


def _fmt(x: float) -> str:
    return repr(float(x))


def _ensure_out(ns: argparse.Namespace) -> str:
    if not ns.out:
        raise ValueError("--out is required for this command")
    os.makedirs(ns.out, exist_ok=True)
    return ns.out


def _write(outdir: str, name: str, text: str) -> None:
    with open(os.path.join(outdir, name), "w", encoding="utf-8",
              newline="") as fh:
        fh.write(text)


def _write_manifest(outdir: str, command: str, ns: argparse.Namespace) -> None:
    params = {key: getattr(ns, key) for key in _MANIFEST_KEYS[command]}
    doc = {"tool": "netimmune", "version": __version__,
           "command": command, "params": params}
    _write(outdir, "manifest.json",
           json.dumps(doc, sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------------------
# command handlers


def cmd_stats(ns: argparse.Namespace) -> int:
    g, _ = _load_graph(ns)
    st = stats(g)
    fields = [("nodes", st.nodes), ("edges", st.edges),
              ("max_degree", st.max_degree), ("clustering", st.clustering),
              ("mean_degree", st.mean_degree),
              ("mean_sq_degree", st.mean_sq_degree),
              ("epidemic_threshold", st.epidemic_threshold)]
    for name, value in fields:
        print(f"{name} {value}")
    if ns.out:
        outdir = _ensure_out(ns)
        header = ",".join(name for name, _ in fields)
        row = ",".join(str(v) for _, v in fields)
        _write(outdir, "stats.csv", f"{header}\n{row}\n")
        _write_manifest(outdir, "stats", ns)
    return EXIT_OK


def _score(g: Graph, method: CentralityMethod, hops: int) -> ScoreVector:
    if method is CentralityMethod.SVID:
        return svid_scores(g, SvidOptions(hops=hops))
    scorer = {CentralityMethod.DEGREE: degree_scores,
              CentralityMethod.BETWEENNESS: betweenness_scores,
              CentralityMethod.EIGENVECTOR: eigenvector_scores,
              CentralityMethod.CORENESS: coreness_scores}[method]
    return scorer(g)


def _scores_csv(g: Graph, sv: ScoreVector) -> str:
    lines = ["node,score,method"]
    for v in g.nodes():
        lines.append(f"{g.labels[v]},{_fmt(sv.theta[v])},{sv.method}")
    return "\n".join(lines) + "\n"


def cmd_rank(ns: argparse.Namespace) -> int:
    g, _ = _load_graph(ns)
    sv = _score(g, CentralityMethod.from_cli(ns.method), ns.hops)
    text = _scores_csv(g, sv)
    if ns.out:
        outdir = _ensure_out(ns)
        _write(outdir, "scores.csv", text)
        _write_manifest(outdir, "rank", ns)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _plan_csv(g: Graph, plan: ImmunizationPlan, r_value: float | None) -> str:
    head = (f"# method={plan.method} q={_fmt(plan.q)} batch={plan.batch_size} "
            f"fallbacks={plan.fallback_count}")
    if r_value is not None:
        head += f" R={_fmt(r_value)}"
    lines = [head, "step,node,lcc_fraction"]
    for i, v in enumerate(plan.order):
        lines.append(f"{i + 1},{g.labels[v]},{_fmt(plan.s_curve[i])}")
    return "\n".join(lines) + "\n"


def _fq_csv(table_q: Sequence[float], columns: dict[str, Sequence[float]]) -> str:
    names = list(columns)
    lines = ["q," + ",".join(names)]
    for i, q in enumerate(table_q):
        row = [_fmt(q)] + [_fmt(columns[name][i]) for name in names]
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def _strategy_config(ns: argparse.Namespace, method: CentralityMethod,
                     q: float) -> StrategyConfig:
    return StrategyConfig(method=method, q=q, batch_fraction=ns.batch,
                          neighbor_exclusion=ns.neighbor_exclusion,
                          svid=SvidOptions(hops=ns.hops))


def cmd_immunize(ns: argparse.Namespace) -> int:
    g, _ = _load_graph(ns)
    cfg = _strategy_config(ns, CentralityMethod.from_cli(ns.method), ns.q)
    plan = run_strategy(g, cfg)
    r_value = robustness(plan).r_value if len(plan.order) == g.node_count \
        else None
    outdir = _ensure_out(ns)
    _write(outdir, "plan.csv", _plan_csv(g, plan, r_value))
    table = f_q_curve([plan])
    _write(outdir, "fq.csv", _fq_csv(table.q, dict(table.columns)))
    _write_manifest(outdir, "immunize", ns)
    line = (f"{ns.method}: removed {len(plan.order)} of {g.node_count} "
            f"nodes, fallbacks {plan.fallback_count}")
    if r_value is not None:
        line += f", R {_fmt(r_value)}"
    print(line)
    if ns.plot:
        _plot_fq(outdir, table.q, dict(table.columns))
    return EXIT_OK


def _read_plan_nodes(path: str, g: Graph) -> list[int]:
    to_id = {lab: v for v, lab in enumerate(g.labels)}
    nodes: list[int] = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or line.startswith("step,"):
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ValueError(f"bad plan row {line!r} in {path}")
            label = int(parts[1])
            if label not in to_id:
                raise ValueError(f"plan node {label} not present in graph")
            nodes.append(to_id[label])
    if not nodes:
        raise ValueError(f"plan file {path} contains no removals")
    return nodes


def cmd_sir(ns: argparse.Namespace) -> int:
    g, _ = _load_graph(ns)
    seed = _require_seed(ns)
    if ns.plan and ns.method:
        raise ValueError("--plan and --method are mutually exclusive")

    immunized: list[int] = []
    method_label = "none"
    q_label = 0.0
    if ns.plan:
        immunized = _read_plan_nodes(ns.plan, g)
        method_label = "plan"
        q_label = len(immunized) / g.node_count
    elif ns.method:
        cfg = _strategy_config(ns, CentralityMethod.from_cli(ns.method), ns.q)
        immunized = list(run_strategy(g, cfg).order)
        method_label = ns.method
        q_label = ns.q

    params = SirParams(infection_rate=ns.lam, recovery_rate=ns.sigma,
                       initial_infected=ns.i0, runs=ns.runs,
                       master_seed=seed, max_steps=ns.max_steps)
    ens = sir_ensemble(g, immunized, params)

    outdir = _ensure_out(ns)
    _write(outdir, "trace.csv", _trace_csv(ens))
    _write(outdir, "summary.csv",
           _summary_csv([(ns.lam, ns.sigma, q_label, method_label,
                          ens.r_abs_mean, ens.r_abs_std)]))
    _write_manifest(outdir, "sir", ns)
    print(f"sir: {method_label} q={_fmt(q_label)} -> "
          f"mean |r| {_fmt(ens.r_abs_mean)} of {ens.active} active")
    if ns.plot:
        _plot_trace(outdir, ens)
    return EXIT_OK


def _trace_csv(ens) -> str:
    lines = ["t,s_mean,i_mean,r_mean,s_std,i_std,r_std"]
    for k in range(len(ens.t)):
        lines.append(",".join([str(int(ens.t[k])),
                               _fmt(ens.s_mean[k]), _fmt(ens.i_mean[k]),
                               _fmt(ens.r_mean[k]), _fmt(ens.s_std[k]),
                               _fmt(ens.i_std[k]), _fmt(ens.r_std[k])]))
    return "\n".join(lines) + "\n"


def _summary_csv(rows: list[tuple[float, float, float, str, float, float]]) -> str:
    lines = ["lambda,sigma,q,method,r_abs_mean,r_abs_std"]
    for lam, sigma, q, method, mean, std in rows:
        lines.append(f"{_fmt(lam)},{_fmt(sigma)},{_fmt(q)},{method},"
                     f"{_fmt(mean)},{_fmt(std)}")
    return "\n".join(lines) + "\n"


def cmd_compare(ns: argparse.Namespace) -> int:
    g, _ = _load_graph(ns)
    seed = _require_seed(ns)
    tags = [t.strip() for t in ns.methods.split(",") if t.strip()]
    if not tags:
        raise ValueError("--methods must name at least one method")
    methods = [CentralityMethod.from_cli(t) for t in tags]
    q_grid = _parse_q_grid(ns.q_grid)

    plans: dict[str, ImmunizationPlan] = {}
    rob_lines = ["method,R,fallbacks"]
    for tag, method in zip(tags, methods):
        plan = full_ordering(g, _strategy_config(ns, method, 1.0))
        plans[tag] = plan
        r = robustness(plan).r_value
        rob_lines.append(f"{tag},{_fmt(r)},{plan.fallback_count}")
        print(f"{tag}: R {_fmt(r)} fallbacks {plan.fallback_count}")

    table = f_q_curve(list(plans.values()))
    columns = dict(zip(plans.keys(), table.columns.values()))

    params = SirParams(infection_rate=ns.lam, recovery_rate=ns.sigma,
                       initial_infected=ns.i0, runs=ns.runs,
                       master_seed=seed, max_steps=ns.max_steps)
    summary_rows: list[tuple[float, float, float, str, float, float]] = []
    baseline = sir_ensemble(g, [], params)
    summary_rows.append((ns.lam, ns.sigma, 0.0, "none",
                         baseline.r_abs_mean, baseline.r_abs_std))
    n = g.node_count
    for q in q_grid:
        count = min(n, math.ceil(q * n))
        for tag in tags:
            immunized = plans[tag].order[:count]
            ens = sir_ensemble(g, immunized, params)
            summary_rows.append((ns.lam, ns.sigma, q, tag,
                                 ens.r_abs_mean, ens.r_abs_std))

    outdir = _ensure_out(ns)
    _write(outdir, "robustness.csv", "\n".join(rob_lines) + "\n")
    _write(outdir, "fq.csv", _fq_csv(table.q, columns))
    _write(outdir, "r_vs_q.csv", _summary_csv(summary_rows))
    _write_manifest(outdir, "compare", ns)
    if ns.plot:
        _plot_fq(outdir, table.q, columns)
    return EXIT_OK


def _parse_q_grid(text: str) -> list[float]:
    try:
        grid = [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ValueError(f"bad q grid {text!r}") from None
    if not grid or any(not 0.0 < q <= 1.0 for q in grid):
        raise ValueError(f"q grid values must lie in (0, 1]: {text!r}")
    return grid


def cmd_replay(ns: argparse.Namespace) -> int:
    with open(ns.manifest, "r", encoding="utf-8") as fh:
        doc = json.load(fh)
    if doc.get("tool") != "netimmune":
        raise ValueError(f"{ns.manifest} is not a netimmune manifest")
    command = doc["command"]
    handlers = {"stats": cmd_stats, "rank": cmd_rank,
                "immunize": cmd_immunize, "sir": cmd_sir,
                "compare": cmd_compare}
    if command not in handlers:
        raise ValueError(f"manifest has unknown command {command!r}")
    replay_ns = argparse.Namespace(**doc["params"])
    replay_ns.out = ns.out
    replay_ns.plot = False
    return handlers[command](replay_ns)


# ---------------------------------------------------------------------------
# optional plotting


def _matplotlib():
    try:
        import matplotlib
        matplotlib.use("svg")
        import matplotlib.pyplot as plt
        return plt
    except ImportError:
        raise ValueError("--plot needs matplotlib installed") from None


def _plot_fq(outdir: str, q: Sequence[float],
             columns: dict[str, Sequence[float]]) -> None:
    plt = _matplotlib()
    fig, ax = plt.subplots(figsize=(6, 4))
    for name, col in columns.items():
        ax.plot(q, col, label=name)
    ax.set_xlabel("removed fraction q")
    ax.set_ylabel("largest component fraction f")
    ax.legend()
    fig.savefig(os.path.join(outdir, "fq.svg"), metadata={"Date": None})
    plt.close(fig)


def _plot_trace(outdir: str, ens) -> None:
    plt = _matplotlib()
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(ens.t, ens.s_mean, label="s")
    ax.plot(ens.t, ens.i_mean, label="i")
    ax.plot(ens.t, ens.r_mean, label="r")
    ax.set_xlabel("t")
    ax.set_ylabel("density")
    ax.legend()
    fig.savefig(os.path.join(outdir, "trace.svg"), metadata={"Date": None})
    plt.close(fig)


if __name__ == "__main__":
    sys.exit(main())
