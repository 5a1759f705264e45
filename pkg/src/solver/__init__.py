"""
Package du solveur par propagation et retour arrière.
"""

from src.solver.clauses import Clause, ClauseDatabase, build_clauses
from src.solver.propagation import Conflict, Progress, SolverState, SolverStats, propagate
from src.solver.schaal import Contradiction, schaal_fixpoint, schaal_force, window_size
from src.solver.search import (
    Indeterminate,
    RRResult,
    Satisfiable,
    Unsatisfiable,
    compute_rr,
    solve,
)
