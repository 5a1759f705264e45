"""
Module pour l'énumération des solutions d'une équation dans [1, N]^n.

L'énumération affecte les variables de gauche à droite et élague dès que la
somme partielle ne peut plus être compensée par les variables restantes.
"""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from src import config
from src.equations.linear import checked
from src.errors import PreconditionError, ResourceCapError

# Configuration du logger
logger = logging.getLogger(__name__)

SolutionTuple = Tuple[int, ...]


def predicted_tuple_count(eq, N):
    """
    Majorant du nombre de tuples émis: la dernière variable libre est
    déterminée par les autres, d'où N^(n-1).
    """
    return N ** (eq.n - 1)


def _check_cap(eq, N, max_tuples):
    if max_tuples is None:
        max_tuples = config.EQUATION_CONFIG["MAX_TUPLES"]
    predicted = predicted_tuple_count(eq, N)
    if predicted > max_tuples:
        raise ResourceCapError(
            f"Énumération refusée pour {eq} sur [1,{N}]: "
            f"{predicted} tuples prévus > plafond {max_tuples}"
        )


def _rest_ranges(coeffs, N, fixed):
    """
    Calcule, pour chaque indice i, l'intervalle atteignable par la somme des
    termes d'indices > i.
    """
    n = len(coeffs)
    lo = [0] * (n + 1)
    hi = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        c = coeffs[i]
        if i in fixed:
            a = b = c * fixed[i]
        elif c > 0:
            a, b = c, c * N
        else:
            a, b = c * N, c
        lo[i] = checked(lo[i + 1] + a, "borne inférieure")
        hi[i] = checked(hi[i + 1] + b, "borne supérieure")
    # lo[i+1], hi[i+1]: plage des variables après i
    return lo, hi


def iter_solutions(eq, N: int, fixed: Optional[Dict[int, int]] = None) -> Iterator[SolutionTuple]:
    """
    Parcourt les solutions dans [1, N]^n en ordre lexicographique.

    Args:
        eq (LinearEquation): Équation
        N (int): Borne de l'intervalle
        fixed (dict): Valeurs imposées {indice de variable: valeur}

    Yields:
        tuple: Chaque solution
    """
    coeffs = eq.coeffs
    n = len(coeffs)
    fixed = fixed or {}
    if any(not 1 <= v <= N for v in fixed.values()):
        return
    lo, hi = _rest_ranges(coeffs, N, fixed)
    values = [0] * n

    def assign(i, partial):
        c = coeffs[i]
        rest_lo, rest_hi = lo[i + 1], hi[i + 1]
        if i in fixed:
            v = fixed[i]
            s = partial + c * v
            if s + rest_lo <= 0 <= s + rest_hi:
                values[i] = v
                if i == n - 1:
                    yield tuple(values)
                else:
                    yield from assign(i + 1, s)
            return
        if i == n - 1:
            # La dernière variable est déterminée
            if partial % c == 0:
                v = -partial // c
                if 1 <= v <= N:
                    values[i] = v
                    yield tuple(values)
            return
        # Intervalle de v tel que partial + c*v + reste contienne 0
        if c > 0:
            v_min = max(1, -((partial + rest_hi) // c))
            v_max = min(N, (-(partial + rest_lo)) // c)
        else:
            d = -c
            v_min = max(1, -(-(partial + rest_lo) // d))
            v_max = min(N, (partial + rest_hi) // d)
        for v in range(v_min, v_max + 1):
            values[i] = v
            yield from assign(i + 1, partial + c * v)

    yield from assign(0, 0)


def enumerate_solutions(eq, N: int, max_tuples: Optional[int] = None) -> List[SolutionTuple]:
    """
    Énumère exactement les tuples de [1, N]^n qui résolvent eq.

    Args:
        eq (LinearEquation): Équation
        N (int): Borne de l'intervalle (N >= 1)
        max_tuples (int): Plafond sur le nombre de tuples prévus

    Returns:
        list: Les solutions, en ordre lexicographique et sans doublon
    """
    if N < 1:
        raise PreconditionError(f"N >= 1 non respecté: N={N}")
    _check_cap(eq, N, max_tuples)
    return list(iter_solutions(eq, N))


def solutions_involving(eq, N: int, v: int, max_tuples: Optional[int] = None) -> List[SolutionTuple]:
    """
    Solutions dans [1, N]^n dont l'ensemble des valeurs contient v.

    Avec v = N, ce sont exactement les solutions de maximum N, c'est-à-dire
    celles qui apparaissent quand l'intervalle passe de N-1 à N.

    Args:
        eq (LinearEquation): Équation
        N (int): Borne de l'intervalle
        v (int): Valeur recherchée (1 <= v <= N)
        max_tuples (int): Plafond sur le nombre de tuples prévus

    Returns:
        list: Les solutions concernées, en ordre lexicographique
    """
    if not 1 <= v <= N:
        raise PreconditionError(f"1 <= v <= N non respecté: v={v}, N={N}")
    _check_cap(eq, N, max_tuples)
    found = set()
    for i in range(eq.n):
        found.update(iter_solutions(eq, N, fixed={i: v}))
    return sorted(found)
