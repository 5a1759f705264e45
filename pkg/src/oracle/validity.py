"""
Module de vérification d'un coloriage contre une paire d'équations.

Un coloriage est valide s'il n'a aucune solution rouge de e0 et aucune
solution bleue de e1.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from src import config
from src.colorings.coloring import Color
from src.equations.solutions import enumerate_solutions

# Configuration du logger
logger = logging.getLogger(__name__)


@dataclass
class ValidityReport:
    """Résultat d'une vérification."""

    valid: bool
    red_violations: List[Tuple[int, ...]] = field(default_factory=list)
    blue_violations: List[Tuple[int, ...]] = field(default_factory=list)

    def violations(self):
        """Toutes les solutions monochromatiques retenues, rouges d'abord."""
        return self.red_violations + self.blue_violations


def monochromatic_solutions(coloring, eq, color, limit=None, max_tuples=None):
    """
    Solutions de eq dans [1, N] entièrement de la couleur donnée.

    Args:
        coloring (Coloring): Coloriage de [1, N]
        eq (LinearEquation): Équation
        color (Color): Couleur recherchée
        limit (int): Nombre maximal de solutions renvoyées
        max_tuples (int): Plafond de l'énumération

    Returns:
        list: Les premières solutions monochromatiques, en ordre lexicographique
    """
    if coloring.N == 0:
        return []
    solutions = enumerate_solutions(eq, coloring.N, max_tuples=max_tuples)
    if not solutions:
        return []
    values = np.array(solutions, dtype=np.int64)
    colors = coloring.assignment[values - 1]
    mono = np.all(colors == int(color), axis=1)
    hits = np.flatnonzero(mono)
    if limit is not None:
        hits = hits[:limit]
    return [solutions[i] for i in hits]


def check_valid(coloring, e0, e1, limit: Optional[int] = None, max_tuples=None):
    """
    Vérifie qu'un coloriage évite les solutions rouges de e0 et bleues de e1.

    Args:
        coloring (Coloring): Coloriage à vérifier
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu
        limit (int): Nombre de violations conservées par équation

    Returns:
        ValidityReport: Le rapport
    """
    if limit is None:
        limit = config.ORACLE_CONFIG["MAX_VIOLATIONS"]
    red = monochromatic_solutions(coloring, e0, Color.RED, limit, max_tuples)
    blue = monochromatic_solutions(coloring, e1, Color.BLUE, limit, max_tuples)
    report = ValidityReport(valid=not red and not blue, red_violations=red, blue_violations=blue)
    if not report.valid:
        logger.debug(
            f"Coloriage de [1,{coloring.N}] invalide: "
            f"{len(red)} solution(s) rouge(s), {len(blue)} solution(s) bleue(s)"
        )
    return report
