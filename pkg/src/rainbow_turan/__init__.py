"""Generalized rainbow Turan numbers: colored constructions, copy census, greedy lemma and exact oracle."""
from .census import CensusReport, count_copies, enumerate_copies, find_rainbow_copy, run_census
from .constructions import ConstructionError, ConstructionSpec
from .graph import ColoredGraph, blow_up, classify_pair, edge, extend_coloring_greedy, validate_proper
from .lemma import LemmaInstance, NotFound, close_rainbow_odd_cycle, find_rainbow_alternating_path
from .oracle import SearchBudget, exact_extremal, fit_exponent, p4_characterize, rainbow_free_colorable
from .patterns import Pattern, parse_pattern

__all__ = [
    "CensusReport", "ColoredGraph", "ConstructionError", "ConstructionSpec", "LemmaInstance", "NotFound",
    "Pattern", "SearchBudget", "blow_up", "classify_pair", "close_rainbow_odd_cycle", "count_copies", "edge",
    "enumerate_copies", "exact_extremal", "extend_coloring_greedy", "find_rainbow_alternating_path",
    "find_rainbow_copy", "fit_exponent", "p4_characterize", "parse_pattern", "rainbow_free_colorable",
    "run_census", "validate_proper",
]
