"""Systoles of Gamma(2, n) hyperbolic surfaces and their maximum."""
from .errors import DomainError, InvalidParams, NoValidRoot, OutOfDomain
from .gamma2n import (
    FAMILIES,
    Family,
    analytic_partials,
    annulus_relations,
    candidate_lengths,
    dual_params,
    lift_chain,
    make_params,
    sigma12_boundary,
    systole_report,
)
from .maximizer import (
    Method,
    SearchConfig,
    brute_force_max,
    cubic_residual,
    genus_table,
    optimal_surface,
    shape_param,
    solve_K_closed_form,
    solve_K_numeric,
)

__version__ = "0.1.0"
