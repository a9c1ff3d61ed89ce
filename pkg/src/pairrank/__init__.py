"""Exact rating of generalized paired-comparison tournaments.

A tournament on n objects is an n-by-n matrix of nonnegative rational
results whose pairwise sums t_ij + t_ji are integers (the number of
matches the pair played). Six rating methods are provided, all in exact
rational arithmetic, together with audits of nine order axioms on
explicit witnesses, a counterexample search over small problems, and a
registry of worked examples with their published values.
"""

from . import errors
from .axioms import (
    AuditReport,
    Axiom,
    AxiomKind,
    ChangedPairWitness,
    PairWitness,
    SingleWitness,
    Violation,
    check_additivity,
    check_independence,
    check_invariance,
    run_check,
)
from .io import (
    format_decimal4,
    format_exact,
    parse_match_list,
    parse_matrix,
    parse_problem,
    parse_rational,
    render_match_list,
    render_matrix,
    render_rating,
)
from .methods import (
    METHOD_KEYS,
    REASONABLE,
    Method,
    RatingVector,
    WeakOrder,
    copeland_fair_bets,
    dual_fair_bets,
    fair_bets,
    generalized_row_sum,
    least_squares,
    ranking,
    reasonable_epsilon,
    score,
)
from .model import (
    DerivedStructure,
    Permutation,
    RankingProblem,
    build_problem,
    derive,
    flat_results,
    is_connected,
    is_irreducible,
    is_round_robin,
    negate,
    permute,
    sum_problems,
)
from .reproduce import ExampleReport, render_reports, reproduce_example, reproduce_many
from .search import SearchConfig, SearchHit, SearchResult, search

__all__ = [
    "AuditReport",
    "Axiom",
    "AxiomKind",
    "ChangedPairWitness",
    "DerivedStructure",
    "ExampleReport",
    "METHOD_KEYS",
    "Method",
    "PairWitness",
    "Permutation",
    "RankingProblem",
    "RatingVector",
    "REASONABLE",
    "SearchConfig",
    "SearchHit",
    "SearchResult",
    "SingleWitness",
    "Violation",
    "WeakOrder",
    "build_problem",
    "check_additivity",
    "check_independence",
    "check_invariance",
    "copeland_fair_bets",
    "derive",
    "dual_fair_bets",
    "errors",
    "fair_bets",
    "flat_results",
    "format_decimal4",
    "format_exact",
    "generalized_row_sum",
    "is_connected",
    "is_irreducible",
    "is_round_robin",
    "least_squares",
    "negate",
    "parse_match_list",
    "parse_matrix",
    "parse_problem",
    "parse_rational",
    "permute",
    "ranking",
    "reasonable_epsilon",
    "render_match_list",
    "render_matrix",
    "render_rating",
    "render_reports",
    "reproduce_example",
    "reproduce_many",
    "run_check",
    "score",
    "search",
    "sum_problems",
]

__version__ = "0.1.0"
