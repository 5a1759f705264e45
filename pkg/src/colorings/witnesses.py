"""
Module pour les coloriages témoins des bornes inférieures.

Chaque constructeur renvoie un coloriage de [1, N-1] qui évite les solutions
rouges de E0 et les solutions bleues de E1 ; il certifie donc RR >= N.
"""

import math
import logging

from src.bounds import closed_forms
from src.colorings.coloring import Color, Coloring
from src.errors import PreconditionError

# Configuration du logger
logger = logging.getLogger(__name__)

REMARK_T6_SIZE = closed_forms.REMARK_T6_VALUE - 1
REMARK_T6_SINGLE_REDS = (1, 2, 3, 37, 39, 40, 41, 43, 46, 47, 48, 49, 50, 52, 56)
REMARK_T6_TAIL_REDS = (570, 576, 594, 606, 612, 648, 684)
# 6*4+6*5 = 54 et 6*42+6*55 = 582 seraient bleues sans ces trois rouges
REMARK_T6_REPAIR_REDS = (53, 54, 55)


def _require(condition, message):
    if not condition:
        raise PreconditionError(message)


def witness_thm21(t, q, s):
    """
    Coloriage de [1, N-1], N = t(t+q)(t+s)+s : [s+t, (q+t)(s+t)-1] en rouge.

    Args:
        t (int): Plus petit coefficient commun
        q (int): Somme des autres coefficients de E0
        s (int): Somme des autres coefficients de E1

    Returns:
        Coloring: Le témoin
    """
    N = closed_forms.lower_bound_thm21(t, q, s)
    reds = range(s + t, (q + t) * (s + t))
    return Coloring.from_red_set(N - 1, reds)


def witness_thm22(t, q, s):
    """
    Témoin de la borne t(t+q)(t+s)+ms pour la paire (tx+qy=z, tx+sy=z).

    Le rouge est [s+t, (q+t)(s+t)-1] complété, lorsque
    m = pgcd(t,q)/pgcd(t,q,s) > 1, par tous les éléments de
    [(q+t)(s+t), N-1] non divisibles par g = pgcd(t,q). Cet ensemble contient
    les t(t+q)(t+s)+is, 1 <= i <= m-1 ; ces seuls ajouts laissent des
    solutions bleues, par exemple 2*31+3*1 = 65 pour (2,4,3).

    Une solution rouge de tx+qy=z a z divisible par g. Une solution bleue de
    tx+sy=z avec x >= (q+t)(s+t) exige g | sy, donc m | y et z >= N.
    """
    N = closed_forms.lower_bound_thm22(t, q, s)
    m = closed_forms.thm22_multiplier(t, q, s)
    if m == 1:
        return witness_thm21(t, q, s)
    g = math.gcd(t, q)
    upper = (q + t) * (s + t)
    reds = set(range(s + t, upper))
    reds.update(i for i in range(upper, N) if i % g != 0)
    return Coloring.from_red_set(N - 1, reds)


def witness_gamma_s1(q):
    """
    Coloriage gamma de [1, N-1], N = 2q + 2*floor((q+1)/2) + 1.

    Les 2*floor((q+1)/2)-1 premiers entiers alternent en commençant par le
    bleu, [2*floor((q+1)/2), 2q+1] est rouge, puis les 2*floor((q+1)/2)-1
    derniers alternent à partir du bleu en 2q+2.

    Args:
        q (int): Coefficient de y dans x+qy=z (ou somme des a_i)

    Returns:
        Coloring: Le témoin contre (x+qy=z rouge, x+y=z bleu)
    """
    _require(q >= 1, f"q >= 1 non respecté: q={q}")
    half = (q + 1) // 2
    edge = 2 * half - 1
    colors = []
    for i in range(1, edge + 1):
        colors.append(Color.BLUE if i % 2 == 1 else Color.RED)
    colors.extend([Color.RED] * (2 * q + 1 - edge))
    for k in range(edge):
        colors.append(Color.BLUE if k % 2 == 0 else Color.RED)
    return Coloring(colors)


def witness_anomalous(t):
    """
    Témoin de R_t(2t+1, t) >= 6t^3+2t^2+4t pour t >= 3.

    Rouge: {1, 2, 6t} ∪ [6t+3, 6t^2+2t-1] ∪ {6t^2+2t <= i <= 12t^2+4t : t | i}.
    """
    _require(t >= 3, f"t >= 3 non respecté: t={t}")
    N = closed_forms.lower_bound_anomalous(t)
    reds = {1, 2, 6 * t}
    reds.update(range(6 * t + 3, 6 * t * t + 2 * t))
    reds.update(i for i in range(6 * t * t + 2 * t, 12 * t * t + 4 * t + 1) if i % t == 0)
    return Coloring.from_red_set(N - 1, reds)


def witness_remark_t6():
    """
    Coloriage explicite de [1, 1392] contre (6x+13y=z rouge, 6x+6y=z bleu).

    La liste publiée laisse 30 solutions bleues, dont (4, 5, 54) ; 53, 54
    et 55 sont donc aussi rouges.
    """
    reds = set(REMARK_T6_SINGLE_REDS)
    reds.update(range(58, 229))
    reds.update(i for i in range(234, 559) if i % 6 == 0)
    reds.update(REMARK_T6_TAIL_REDS)
    reds.update(REMARK_T6_REPAIR_REDS)
    return Coloring.from_red_set(REMARK_T6_SIZE, reds)


def build_witness(name, t=None, q=None, s=None):
    """
    Construit un témoin par son nom de construction.

    Args:
        name (str): thm21 | thm22 | gamma | anomalous | remark-t6
        t, q, s (int): Paramètres de la construction

    Returns:
        Coloring: Le témoin
    """
    if name == "thm21":
        return witness_thm21(t, q, s)
    if name == "thm22":
        return witness_thm22(t, q, s)
    if name == "gamma":
        return witness_gamma_s1(q)
    if name == "anomalous":
        return witness_anomalous(t)
    if name == "remark-t6":
        return witness_remark_t6()
    raise PreconditionError(f"Construction inconnue: {name}")


def best_witness(e0, e1):
    """
    Choisit le meilleur témoin connu pour la paire (e0 rouge, e1 bleu).

    Args:
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu

    Returns:
        tuple: (nom de la construction, Coloring) ou (None, None)
    """
    flip, params, candidates = closed_forms.witness_candidates(e0, e1)
    if not candidates:
        return None, None

    # Premier maximum dans l'ordre des candidats
    best_name, best_value = candidates[0]
    for name, value in candidates[1:]:
        if value > best_value:
            best_name, best_value = name, value

    t, q, s = params
    best = build_witness(best_name, t, q, s)
    if flip:
        best = best.flipped()
    logger.debug(f"Témoin retenu: {best_name} sur [1,{best.N}]")
    return best_name, best
