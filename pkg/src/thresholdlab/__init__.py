"""Irreversible k-threshold conversion on corona and double-corona graphs."""

from .closed_form import (
    ConversionNumber,
    Finite,
    Inconvertible,
    conv_corona,
    conv_cycle,
    conv_double_corona,
    reduce_corona,
    reduce_double_corona,
)
from .constructions import (
    canonical_corona_seed,
    canonical_double_corona_pattern,
    canonical_double_corona_seed,
    pattern_to_seed,
    seed_to_pattern,
)
from .dynamics import ProcessTrace, is_conversion_set, required_low_degree_vertices, run, step
from .graph_core import Graph, VertexRole, build_complete, build_corona, build_cycle, build_double_corona
from .probability import (
    EstimateReport,
    enumeration_probability,
    monte_carlo_probability,
    resilience_factor,
    success_probability_corona,
)
from .search import BudgetExceeded, SearchReport, brute_force_min, count_converting_sets

__version__ = "0.1.0"
