"""
Module pour l'état du solveur et la propagation unitaire.

Quand tous les éléments d'une clause sauf un ont la couleur opposée à sa
demande, le dernier reçoit la couleur demandée. Les règles de forçage
par paires d'éléments de même couleur en sont un cas particulier.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import List, NamedTuple, Optional, Tuple

from src.colorings.coloring import UNSET, Color, PartialColoring
from src.errors import PreconditionError

# Configuration du logger
logger = logging.getLogger(__name__)


class TrailRecord(NamedTuple):
    """Affectation justifiée: reason est l'indice de la clause, ou None pour un choix."""

    position: int
    color: Color
    reason: Optional[int]


@dataclass
class Progress:
    """Point fixe atteint sans conflit."""

    forced: List[Tuple[int, Color]] = field(default_factory=list)


@dataclass
class Conflict:
    """Une clause a tous ses éléments de la couleur opposée à sa demande."""

    clause_id: int
    clause: object


@dataclass
class SolverStats:
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0

    def add(self, other):
        self.decisions += other.decisions
        self.propagations += other.propagations
        self.conflicts += other.conflicts


class SolverState:
    """
    Coloriage partiel, trace et file des positions à propager.

    Seules les clauses contenues dans [1, N] sont prises en compte.
    """

    def __init__(self, database, N):
        """
        Args:
            database (ClauseDatabase): Base de clauses de la paire
            N (int): Taille de l'intervalle
        """
        self.database = database
        self.N = N
        self.limit = database.prefix_length(N)
        self.partial = PartialColoring(N)
        self.trail: List[TrailRecord] = []
        self.pending = deque()
        self.stats = SolverStats()

    def assign(self, position, color, reason=None):
        """Colorie une position libre et la met en file de propagation."""
        self.partial.set(position, color)
        self.trail.append(TrailRecord(position, Color(color), reason))
        self.pending.append(position)

    def seed(self, reds=(), blues=()):
        """
        Colorie des positions initiales (sans clause pour raison).

        Args:
            reds (Iterable[int]): Positions rouges
            blues (Iterable[int]): Positions bleues
        """
        reds, blues = set(reds), set(blues)
        if reds & blues:
            raise PreconditionError(f"Positions à la fois rouges et bleues: {sorted(reds & blues)}")
        for p in sorted(reds | blues):
            if not 1 <= p <= self.N:
                raise PreconditionError(f"Position {p} hors de [1,{self.N}]")
            self.assign(p, Color.RED if p in reds else Color.BLUE)

    def undo_to(self, mark):
        """Défait la trace jusqu'à la longueur mark."""
        values = self.partial.values
        while len(self.trail) > mark:
            record = self.trail.pop()
            values[record.position] = UNSET
        self.pending.clear()

    def assert_units(self):
        """
        Affecte les clauses à un seul élément.

        Returns:
            Conflict ou None
        """
        values = self.partial.values
        clauses = self.database.clauses
        for cid in range(self.limit):
            clause = clauses[cid]
            if len(clause.members) != 1:
                continue
            p = clause.members[0]
            if values[p] == UNSET:
                self.assign(p, clause.demanded, cid)
                self.stats.propagations += 1
            elif values[p] != clause.demanded:
                self.stats.conflicts += 1
                return Conflict(cid, clause)
        return None

    def red_set(self):
        return self.partial.red_set()

    def blue_set(self):
        return self.partial.blue_set()


def propagate(state, downward_only=False):
    """
    Propage jusqu'au point fixe les affectations en file.

    Args:
        state (SolverState): État à propager (modifié sur place)
        downward_only (bool): Ne jamais forcer le plus grand élément d'une
            clause ; seules restent les déductions tirées du maximum et d'un
            autre élément de même couleur

    Returns:
        Progress ou Conflict
    """
    values = state.partial.values
    clauses = state.database.clauses
    falsified_by = state.database.falsified_by
    limit = state.limit
    pending = state.pending
    forced = []

    while pending:
        position = pending.popleft()
        color = values[position]
        for cid in falsified_by[color][position]:
            if cid >= limit:
                break
            clause = clauses[cid]
            demanded = clause.demanded
            free = None
            free_count = 0
            satisfied = False
            for m in clause.members:
                v = values[m]
                if v == demanded:
                    satisfied = True
                    break
                if v == UNSET:
                    free_count += 1
                    free = m
                    if free_count > 1:
                        break
            if satisfied or free_count > 1:
                continue
            if free_count == 0:
                pending.clear()
                state.stats.conflicts += 1
                return Conflict(cid, clause)
            if downward_only and free == clause.members[-1]:
                continue
            state.assign(free, demanded, cid)
            state.stats.propagations += 1
            forced.append((free, demanded))

    return Progress(forced)
