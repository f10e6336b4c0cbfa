"""Exact solver and analysis suite for the indicated domination game.

Dominator indicates an undominated vertex each round; Staller selects
any vertex from its closed neighborhood, dominating that vertex's
closed neighborhood.  Dominator wants the game short, Staller wants it
long; with both playing optimally the game lasts the indicated
domination number of rounds.

The package computes that number exactly, alongside the classical
domination chain, strategy agents with proven guarantees, a theorem
verification harness for graph6 streams, and a CLI plus HTTP service
for interactive play.
"""

from .engine import (GameState, SolveBudgetError, SolveLimits, SolveResult,
                     SolveStats, Solver, apply_round, best_indication,
                     best_selection, game_domination_number, initial_state,
                     legal_indications, selections_for, solve_gi, value_of)
from .graphs import (Graph, GraphError, VertexSet, build_graph,
                     cartesian_product, graph_power, join)
from .graphio import (EdgeListError, FormatError, Graph6Error, encode_graph6,
                      format_edge_list, parse_edge_list, parse_graph6)
from .families import FamilyError, FamilySpec, generate_family
from .invariants import (ChainReport, EdgeCover, ExactBudgetError,
                         IrredundanceBounds, chain_report, domination_number,
                         grundy_domination, independence_number,
                         independent_domination_number, irredundance_bounds,
                         min_edge_cover, upper_domination)
from .harness import (CheckRow, CheckSpec, ScanReport, check_conjecture,
                      extremal_structure_check, pathpower_bounds, scan_stream,
                      verify_extremal)
from .strategies import (OPTIMAL, Agent, GameRecord, IllegalAgentMove,
                         StrategyError, make_dominator_grid,
                         make_dominator_pathpower, make_dominator_split,
                         make_dominator_tree, make_staller_gamma,
                         make_staller_pathpower, play_match)

__version__ = "1.0.0"

__all__ = [
    "Agent", "ChainReport", "CheckRow", "CheckSpec", "EdgeCover",
    "EdgeListError", "ExactBudgetError", "FamilyError", "FamilySpec",
    "FormatError", "GameRecord", "GameState", "Graph", "Graph6Error",
    "GraphError", "IllegalAgentMove", "IrredundanceBounds", "OPTIMAL",
    "ScanReport", "SolveBudgetError", "SolveLimits", "SolveResult",
    "SolveStats", "Solver", "StrategyError", "VertexSet", "apply_round",
    "best_indication", "best_selection", "build_graph", "cartesian_product",
    "chain_report", "check_conjecture", "domination_number", "encode_graph6",
    "extremal_structure_check", "format_edge_list", "game_domination_number",
    "generate_family", "graph_power", "grundy_domination",
    "independence_number", "independent_domination_number", "initial_state",
    "irredundance_bounds", "join", "legal_indications", "make_dominator_grid",
    "make_dominator_pathpower", "make_dominator_split", "make_dominator_tree",
    "make_staller_gamma", "make_staller_pathpower", "min_edge_cover",
    "parse_edge_list", "parse_graph6", "pathpower_bounds", "play_match",
    "scan_stream", "selections_for", "solve_gi", "upper_domination",
    "value_of", "verify_extremal",
]
