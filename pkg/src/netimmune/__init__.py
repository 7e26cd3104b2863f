"""netimmune: rank nodes, immunize networks, and measure what breaks.

The library ranks nodes with a group-value centrality built from edge-wise
join-order probabilities (svid), plus four classic benchmarks, drives an
adaptive remove-and-rescore immunization engine, and evaluates the result
with largest-component robustness curves and discrete-time SIR ensembles.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .baselines import (CentralityMethod, betweenness_scores, coreness_scores,
                        degree_scores, eigenvector_scores)
from .edgelist import (EdgeListParseError, ParseReport, read_edge_list,
                       read_edge_list_with_report, write_edge_list)
from .evaluate import (FqTable, RobustnessResult, collapse_point, f_q_curve,
                       robustness)
from .generators import GenSpec, barabasi_albert, erdos_renyi, generate
from .graph import (Graph, GraphStats, common_neighbors, degree, lcc_curve,
                    lcc_size, stats)
from .immunize import (ImmunizationPlan, StrategyConfig, full_ordering,
                       run_strategy)
from .shapley import (CoalitionGame, ScoreVector, SvidOptions, exact_shapley,
                      fringe_game, neighbors_game, ordering_probability,
                      spin_shapley, svid_adaptive_select, svid_scores)
from .sir import (SirEnsemble, SirParams, SirTrace, epidemic_threshold,
                  sir_ensemble, sir_run)

__all__ = [
    "__version__",
    "CentralityMethod", "betweenness_scores", "coreness_scores",
    "degree_scores", "eigenvector_scores",
    "EdgeListParseError", "ParseReport", "read_edge_list",
    "read_edge_list_with_report", "write_edge_list",
    "FqTable", "RobustnessResult", "collapse_point", "f_q_curve",
    "robustness",
    "GenSpec", "barabasi_albert", "erdos_renyi", "generate",
    "Graph", "GraphStats", "common_neighbors", "degree", "lcc_curve",
    "lcc_size", "stats",
    "ImmunizationPlan", "StrategyConfig", "full_ordering", "run_strategy",
    "CoalitionGame", "ScoreVector", "SvidOptions", "exact_shapley",
    "fringe_game", "neighbors_game", "ordering_probability", "spin_shapley",
    "svid_adaptive_select", "svid_scores",
    "SirEnsemble", "SirParams", "SirTrace", "epidemic_threshold",
    "sir_ensemble", "sir_run",
]
