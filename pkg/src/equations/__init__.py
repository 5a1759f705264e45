"""
Package pour les équations linéaires homogènes et leurs solutions.
"""

from src.equations.linear import (
    CanonicalForm,
    FForm,
    LinearEquation,
    SumForm,
    equation_pair_from_f_form,
    f_form_parameters,
    lift_solution,
    multivar_equation,
    normalize,
    normalize_pair,
    parse_equation,
    render_equation,
    rr_exists_guaranteed,
)
from src.equations.solutions import (
    enumerate_solutions,
    iter_solutions,
    solutions_involving,
)
