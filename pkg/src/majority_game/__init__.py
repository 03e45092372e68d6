"""Exact-computation workbench for the SAME/DIFF majority query game."""

from .bounds import certify_lower_bound, count_balanced, dectree_bound, is_hard, popcount
from .core import Answer, Graph, Outcome, QueryState, apply_query, initial_state, terminal_outcome
from .graphsolver import forced_queries, optimal_querier, play, solve_graph
from .weighted import relevance_threshold, relevant, solve_weighted, weighted_terminal

__all__ = [
    "Answer",
    "Graph",
    "Outcome",
    "QueryState",
    "apply_query",
    "certify_lower_bound",
    "count_balanced",
    "dectree_bound",
    "forced_queries",
    "initial_state",
    "is_hard",
    "optimal_querier",
    "play",
    "popcount",
    "relevance_threshold",
    "relevant",
    "solve_graph",
    "solve_weighted",
    "terminal_outcome",
    "weighted_terminal",
]
