"""
Module pour les règles de forçage littérales sur la paire (tx+qy=z, tx+sy=z).

Pour x, y rouges:
    (y - tx)/q est bleu s'il est entier et positif ;
    (y - qx)/t est bleu s'il est entier et positif ;
    x/(q+t) est bleu s'il est entier.
Pour x, y bleus, les mêmes règles avec s à la place de q forcent du rouge.
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, Optional, Set

from src.errors import PreconditionError

# Configuration du logger
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Contradiction:
    """Éléments forcés vers une couleur alors qu'ils ont déjà l'autre."""

    elements: FrozenSet[int]


@dataclass
class SchaalFixpoint:
    red: Set[int] = field(default_factory=set)
    blue: Set[int] = field(default_factory=set)
    rounds: int = 0
    contradiction: Optional[Contradiction] = None


def window_size(t, q, s):
    """Fenêtre de recherche tqs + t^2 q + (t^2+1) s + t^3."""
    return t * q * s + t * t * q + (t * t + 1) * s + t ** 3


def _forced_by(t, j, colored):
    """Éléments forcés à la couleur opposée par les paires de colored."""
    forced = set()
    for x in colored:
        if x % (j + t) == 0:
            forced.add(x // (j + t))
        for y in colored:
            d = y - t * x
            if d > 0 and d % j == 0:
                forced.add(d // j)
            d = y - j * x
            if d > 0 and d % t == 0:
                forced.add(d // t)
    return forced


def _validate(t, q, s, R, B, N):
    for name, value in (("t", t), ("q", q), ("s", s), ("N", N)):
        if value < 1:
            raise PreconditionError(f"{name} >= 1 non respecté: {name}={value}")
    outside = sorted(v for v in R | B if not 1 <= v <= N)
    if outside:
        raise PreconditionError(f"Éléments hors de [1,{N}]: {outside}")
    if R & B:
        raise PreconditionError(f"R et B doivent être disjoints: {sorted(R & B)}")


def schaal_force(t, q, s, R, B, N):
    """
    Applique une fois les six règles à toutes les paires ordonnées de R et B.

    Args:
        t, q, s (int): Paramètres de la paire (tx+qy=z rouge, tx+sy=z bleu)
        R (set): Éléments rouges
        B (set): Éléments bleus
        N (int): Taille de l'intervalle

    Returns:
        tuple: (nouveaux rouges, nouveaux bleus), ou Contradiction
    """
    R, B = set(R), set(B)
    _validate(t, q, s, R, B, N)
    to_blue = _forced_by(t, q, R)
    to_red = _forced_by(t, s, B)
    clash = (to_blue & R) | (to_red & B) | (to_blue & to_red)
    if clash:
        return Contradiction(frozenset(clash))
    return to_red - R, to_blue - B


def schaal_fixpoint(t, q, s, R, B, N):
    """
    Itère schaal_force jusqu'à ce qu'aucun élément ne soit ajouté.

    Returns:
        SchaalFixpoint: Ensembles finaux, nombre de tours et éventuelle
        contradiction (les éléments à la fois rouges et bleus)
    """
    result = SchaalFixpoint(red=set(R), blue=set(B))
    while True:
        outcome = schaal_force(t, q, s, result.red, result.blue, N)
        result.rounds += 1
        if isinstance(outcome, Contradiction):
            result.contradiction = outcome
            logger.debug(f"Contradiction au tour {result.rounds}: {sorted(outcome.elements)}")
            return result
        new_red, new_blue = outcome
        if not new_red and not new_blue:
            return result
        result.red |= new_red
        result.blue |= new_blue
