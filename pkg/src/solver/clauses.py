"""
Module pour les clauses de demande de couleur.

Chaque solution de e0 donne une clause « au moins un de ces entiers est
bleu », chaque solution de e1 une clause « au moins un est rouge ». Les
tuples permutés sont fusionnés par ensemble de valeurs.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from src import config
from src.colorings.coloring import Color
from src.equations.solutions import enumerate_solutions, solutions_involving

# Configuration du logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Clause:
    """Au moins un élément de members reçoit la couleur demanded."""

    demanded: Color
    members: Tuple[int, ...]

    def __post_init__(self):
        members = tuple(sorted(set(int(m) for m in self.members)))
        if not members:
            raise ValueError("Une clause doit contenir au moins un élément")
        if members[0] < 1:
            raise ValueError(f"Éléments positifs requis: {members}")
        object.__setattr__(self, "members", members)
        object.__setattr__(self, "demanded", Color(self.demanded))

    @property
    def maximum(self):
        return self.members[-1]

    def __len__(self):
        return len(self.members)


def _equation_roles(e0, e1):
    # e0 doit éviter le rouge, donc ses solutions demandent du bleu
    return ((e0, Color.BLUE), (e1, Color.RED))


def build_clauses(e0, e1, N, max_tuples=None) -> Set[Clause]:
    """
    Construit toutes les clauses de la paire sur [1, N], sans subsomption.

    Args:
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu
        N (int): Taille de l'intervalle

    Returns:
        set: Une clause par ensemble de valeurs distinct et par équation
    """
    clauses = set()
    for eq, demanded in _equation_roles(e0, e1):
        for solution in enumerate_solutions(eq, N, max_tuples=max_tuples):
            clauses.add(Clause(demanded, solution))
    return clauses


class ClauseDatabase:
    """
    Base de clauses incrémentale pour une paire d'équations.

    Les clauses sont numérotées par maximum croissant: celles qui tiennent
    dans [1, N] forment le préfixe de longueur prefix_length(N). Pour chaque
    couleur c et position p, falsified_by[c][p] liste, en ordre croissant, les
    clauses qu'affecter c à p rapproche d'une violation.
    """

    def __init__(self, e0, e1, subsumption: Optional[bool] = None, max_tuples=None):
        """
        Initialise une base vide (N = 0).

        Args:
            e0 (LinearEquation): Équation à éviter en rouge
            e1 (LinearEquation): Équation à éviter en bleu
            subsumption (bool): Écarter les clauses qui contiennent une
                clause de même demande
            max_tuples (int): Plafond de l'énumération
        """
        if subsumption is None:
            subsumption = config.SOLVER_CONFIG["SUBSUMPTION"]
        self.e0 = e0
        self.e1 = e1
        self.subsumption = subsumption
        self.max_tuples = max_tuples
        self.N = 0
        self.clauses: List[Clause] = []
        self.falsified_by: Tuple[List[List[int]], List[List[int]]] = ([[]], [[]])
        self._prefix: List[int] = [0]
        self._keys: Set[Tuple[int, Tuple[int, ...]]] = set()
        self.subsumed = 0

    def _subsumed(self, clause):
        members = clause.members
        for size in range(1, len(members)):
            for subset in combinations(members, size):
                if (clause.demanded, subset) in self._keys:
                    return True
        return False

    def _add(self, clause):
        key = (clause.demanded, clause.members)
        if key in self._keys:
            return
        if self.subsumption and self._subsumed(clause):
            self.subsumed += 1
            return
        self._keys.add(key)
        cid = len(self.clauses)
        self.clauses.append(clause)
        against = clause.demanded.opposite
        for m in clause.members:
            self.falsified_by[against][m].append(cid)

    def extend_to(self, N):
        """
        Ajoute les clauses de maximum N_courant+1, ..., N.

        Args:
            N (int): Nouvelle taille de l'intervalle
        """
        for v in range(self.N + 1, N + 1):
            for lists in self.falsified_by:
                lists.append([])
            fresh: Dict[Tuple[int, Tuple[int, ...]], Clause] = {}
            for eq, demanded in _equation_roles(self.e0, self.e1):
                for solution in solutions_involving(eq, v, v, max_tuples=self.max_tuples):
                    clause = Clause(demanded, solution)
                    fresh[(clause.demanded, clause.members)] = clause
            for clause in sorted(fresh.values(), key=lambda c: (len(c), c)):
                self._add(clause)
            self._prefix.append(len(self.clauses))
            self.N = v
        logger.debug(
            f"Base de clauses étendue à [1,{self.N}]: {len(self.clauses)} clauses, "
            f"{self.subsumed} subsumées"
        )

    def prefix_length(self, N):
        """Nombre de clauses dont tous les éléments sont dans [1, N]."""
        if N > self.N:
            self.extend_to(N)
        return self._prefix[N]

    def clauses_upto(self, N):
        return self.clauses[: self.prefix_length(N)]

    def positions(self, N):
        """Positions de [1, N] qui apparaissent dans au moins une clause."""
        limit = self.prefix_length(N)
        used = set()
        for clause in self.clauses[:limit]:
            used.update(clause.members)
        return sorted(used)
