"""
Module de recherche exhaustive des coloriages valides pour de petits N.

Les colorations sont parcourues en profondeur, rouge avant bleu, position par
position ; les ensembles de valeurs des solutions sont indexés par leur plus
grand élément, de sorte qu'à la position v seules les solutions de maximum v
sont testées.
"""

import logging
from typing import Dict, List, Optional

from src import config
from src.colorings.coloring import Coloring
from src.equations.solutions import enumerate_solutions
from src.errors import PreconditionError, ResourceCapError

# Configuration du logger
logger = logging.getLogger(__name__)


def _check_cap(N, max_n):
    if max_n is None:
        max_n = config.ORACLE_CONFIG["MAX_N"]
    if N > max_n:
        raise ResourceCapError(f"Oracle exhaustif limité à N <= {max_n}: N={N}")


def _masks_by_max(eq, N) -> Dict[int, List[int]]:
    """Masques binaires des ensembles de valeurs, groupés par maximum."""
    index: Dict[int, set] = {}
    for solution in enumerate_solutions(eq, N):
        mask = 0
        for v in solution:
            mask |= 1 << v
        index.setdefault(max(solution), set()).add(mask)
    return {v: sorted(masks) for v, masks in index.items()}


def _search(N, red_index, blue_index):
    """Premier coloriage valide de [1, N] en ordre lexicographique, ou None."""
    colors = [0] * N

    def extend(v, red_mask, blue_mask):
        if v > N:
            return True
        bit = 1 << v
        # Rouge (0) avant bleu (1)
        new_red = red_mask | bit
        if all(m & new_red != m for m in red_index.get(v, ())):
            colors[v - 1] = 0
            if extend(v + 1, new_red, blue_mask):
                return True
        new_blue = blue_mask | bit
        if all(m & new_blue != m for m in blue_index.get(v, ())):
            colors[v - 1] = 1
            if extend(v + 1, red_mask, new_blue):
                return True
        return False

    if extend(1, 0, 0):
        return Coloring(colors)
    return None


def exhaustive_sat(e0, e1, N, max_n=None) -> Optional[Coloring]:
    """
    Cherche un coloriage valide de [1, N] par force brute.

    Args:
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu
        N (int): Taille de l'intervalle
        max_n (int): Plafond sur N (25 par défaut)

    Returns:
        Coloring: Le premier coloriage valide en ordre lexicographique
        (rouge avant bleu), ou None
    """
    if N < 1:
        raise PreconditionError(f"N >= 1 non respecté: N={N}")
    _check_cap(N, max_n)
    return _search(N, _masks_by_max(e0, N), _masks_by_max(e1, N))


def exhaustive_rr(e0, e1, cap, max_n=None) -> Optional[int]:
    """
    Plus petit N <= cap sans coloriage valide, par force brute.

    Returns:
        int: La valeur trouvée, ou None si tous les N <= cap admettent un
        coloriage valide
    """
    if cap < 1:
        raise PreconditionError(f"cap >= 1 non respecté: cap={cap}")
    _check_cap(cap, max_n)
    red_index = _masks_by_max(e0, cap)
    blue_index = _masks_by_max(e1, cap)
    for N in range(1, cap + 1):
        if _search(N, red_index, blue_index) is None:
            logger.debug(f"Oracle: aucun coloriage valide de [1,{N}]")
            return N
    return None
