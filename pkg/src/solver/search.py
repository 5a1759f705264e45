"""
Module pour la recherche avec retour arrière et le calcul exact de RR.

La recherche choisit la plus petite position libre apparaissant dans une
clause, essaie le rouge puis le bleu (ou la couleur suggérée d'abord) et
revient chronologiquement sur le dernier choix en cas de conflit.
"""

import time
import logging
from dataclasses import dataclass, field
from typing import Optional

from src import config
from src.bounds.closed_forms import best_lower_bound
from src.colorings.coloring import UNSET, Color, Coloring
from src.colorings.witnesses import best_witness
from src.errors import PreconditionError, SelfCheckError
from src.oracle.validity import check_valid
from src.solver.clauses import ClauseDatabase
from src.solver.propagation import Conflict, SolverState, SolverStats, propagate

# Configuration du logger
logger = logging.getLogger(__name__)


@dataclass
class Satisfiable:
    coloring: Coloring
    stats: SolverStats = field(default_factory=SolverStats)


@dataclass
class Unsatisfiable:
    stats: SolverStats = field(default_factory=SolverStats)


@dataclass
class Indeterminate:
    """Délai ou plafond atteint avant toute conclusion."""

    reason: str
    N: int = 0
    lower_bound: int = 2
    stats: SolverStats = field(default_factory=SolverStats)


@dataclass
class RRResult:
    """Valeur exacte, témoin de [1, value-1] et statistiques de la réfutation en value."""

    value: int
    witness: Coloring
    stats: SolverStats = field(default_factory=SolverStats)
    elapsed: float = 0.0
    start_hint: int = 2


def _first_color(phase_hint, position):
    if phase_hint is not None and position <= phase_hint.N:
        return Color(int(phase_hint.assignment[position - 1]))
    return Color.RED


def solve(
    e0,
    e1,
    N,
    phase_hint: Optional[Coloring] = None,
    timeout: Optional[float] = None,
    database: Optional[ClauseDatabase] = None,
    clock=time.monotonic,
):
    """
    Décide s'il existe un coloriage valide de [1, N].

    Args:
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu
        N (int): Taille de l'intervalle
        phase_hint (Coloring): Couleur essayée en premier pour chaque position
        timeout (float): Délai en secondes (SOLVER_CONFIG par défaut)
        database (ClauseDatabase): Base partagée entre plusieurs N
        clock (callable): Horloge monotone

    Returns:
        Satisfiable, Unsatisfiable ou Indeterminate
    """
    if N < 1:
        raise PreconditionError(f"N >= 1 non respecté: N={N}")
    if timeout is None:
        timeout = config.SOLVER_CONFIG["TIMEOUT"]
    interval = config.SOLVER_CONFIG["CLOCK_CHECK_INTERVAL"]
    deadline = clock() + timeout

    if database is None:
        database = ClauseDatabase(e0, e1)
    state = SolverState(database, N)
    positions = database.positions(N)
    values = state.partial.values
    stats = state.stats

    if state.assert_units() is not None:
        return Unsatisfiable(stats)
    base = len(state.trail)

    # Pile des choix: (indice dans positions, marque de trace, couleur, second essai)
    choices = []
    cursor = 0
    steps = 0
    while True:
        steps += 1
        if steps % interval == 0 and clock() > deadline:
            logger.info(f"Délai dépassé pour N={N} après {stats.decisions} décisions")
            return Indeterminate("timeout", N=N, stats=stats)

        if isinstance(propagate(state), Conflict):
            while choices:
                index, mark, color, second = choices.pop()
                state.undo_to(mark)
                if not second:
                    other = color.opposite
                    choices.append((index, mark, other, True))
                    state.assign(positions[index], other)
                    cursor = index + 1
                    break
            else:
                state.undo_to(base)
                logger.debug(f"N={N}: insatisfiable")
                return Unsatisfiable(stats)
            continue

        while cursor < len(positions) and values[positions[cursor]] != UNSET:
            cursor += 1
        if cursor == len(positions):
            break

        position = positions[cursor]
        color = _first_color(phase_hint, position)
        choices.append((cursor, len(state.trail), color, False))
        state.assign(position, color)
        stats.decisions += 1
        cursor += 1

    for p in range(1, N + 1):
        if values[p] == UNSET:
            values[p] = int(_first_color(phase_hint, p))
    coloring = state.partial.to_coloring()
    report = check_valid(coloring, e0, e1)
    if not report.valid:
        raise SelfCheckError(
            f"Coloriage de [1,{N}] produit par la recherche invalide: {report.violations()[:4]}"
        )
    logger.debug(f"N={N}: satisfiable ({stats.decisions} décisions)")
    return Satisfiable(coloring, stats)


def compute_rr(
    e0,
    e1,
    start_hint: Optional[int] = None,
    cap: Optional[int] = None,
    timeout: Optional[float] = None,
    total_budget: Optional[float] = None,
    subsumption: Optional[bool] = None,
    clock=time.monotonic,
):
    """
    Calcule exactement RR(e0, e1).

    La satisfiabilité est d'abord vérifiée en start_hint-1 ; en cas d'échec
    la recherche redescend jusqu'au premier N satisfiable, sinon elle monte
    jusqu'au premier N insatisfiable. Les coloriages trouvés servent de
    suggestion de couleur pour le N suivant.

    Args:
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu
        start_hint (int): Point de départ (meilleure borne connue par défaut)
        cap (int): Plus grand N examiné
        timeout (float): Délai par N
        total_budget (float): Délai global
        subsumption (bool): Subsomption des clauses

    Returns:
        RRResult ou Indeterminate
    """
    started = clock()
    if start_hint is None:
        name, start_hint = best_lower_bound(e0, e1)
        logger.info(f"Point de départ {start_hint} ({name})")
    if start_hint < 2:
        raise PreconditionError(f"start_hint >= 2 non respecté: start_hint={start_hint}")
    if cap is None:
        cap = config.SOLVER_CONFIG["SCAN_CAP"]
    if timeout is None:
        timeout = config.SOLVER_CONFIG["TIMEOUT"]
    if total_budget is None:
        total_budget = config.SOLVER_CONFIG["TOTAL_BUDGET"]

    database = ClauseDatabase(e0, e1, subsumption=subsumption)
    _, hint = best_witness(e0, e1)
    total = SolverStats()

    def run(N, phase_hint):
        budget = timeout
        if total_budget is not None:
            budget = min(budget, total_budget - (clock() - started))
            if budget <= 0:
                return Indeterminate("budget", N=N, stats=SolverStats())
        outcome = solve(e0, e1, N, phase_hint=phase_hint, timeout=budget, database=database, clock=clock)
        total.add(outcome.stats)
        logger.info(
            f"N={N}: {type(outcome).__name__} "
            f"(décisions={outcome.stats.decisions}, propagations={outcome.stats.propagations}, "
            f"conflits={outcome.stats.conflicts})"
        )
        return outcome

    def finish(value, witness, stats):
        result = RRResult(value, witness, stats, clock() - started, start_hint)
        logger.info(f"RR = {value} en {result.elapsed:.2f} s ({total.decisions} décisions au total)")
        return result

    N = start_hint - 1
    if N > cap:
        return Indeterminate("cap", N=N, lower_bound=2)

    outcome = run(N, hint)
    if isinstance(outcome, Indeterminate):
        outcome.lower_bound = 2
        return outcome

    if isinstance(outcome, Unsatisfiable):
        refutation = outcome.stats
        while True:
            N -= 1
            if N == 0:
                return finish(1, Coloring([]), refutation)
            lower = run(N, hint)
            if isinstance(lower, Indeterminate):
                lower.lower_bound = 2
                return lower
            if isinstance(lower, Satisfiable):
                return finish(N + 1, lower.coloring, refutation)
            refutation = lower.stats

    witness = outcome.coloring
    while True:
        N += 1
        if N > cap:
            return Indeterminate("cap", N=N, lower_bound=N)
        outcome = run(N, witness)
        if isinstance(outcome, Indeterminate):
            outcome.lower_bound = N
            return outcome
        if isinstance(outcome, Unsatisfiable):
            return finish(N, witness, outcome.stats)
        witness = outcome.coloring
