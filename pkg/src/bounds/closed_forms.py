"""
Module pour les formules fermées: bornes inférieures et valeurs exactes.

Les préconditions sont exactement les hypothèses des théorèmes ; aucune
formule n'est évaluée hors de son domaine de validité.
"""

import math
import logging

from src.equations.linear import SumForm, checked
from src.errors import PreconditionError

# Configuration du logger
logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise PreconditionError(message)


def _positive(**params):
    for name, value in params.items():
        _require(value >= 1, f"{name} >= 1 non respecté: {name}={value}")


def lower_bound_thm21(t, q, s):
    """
    Borne générale t(t+q)(t+s)+s.

    Args:
        t (int): Plus petit coefficient commun (t >= 1)
        q (int): Somme des autres coefficients de E0
        s (int): Somme des autres coefficients de E1 (q >= s >= 1)

    Returns:
        int: La borne inférieure
    """
    _positive(t=t, s=s)
    _require(q >= s, f"q >= s non respecté: q={q}, s={s}")
    return checked(t * (t + q) * (t + s) + s, "borne thm21")


def thm22_multiplier(t, q, s):
    """m = pgcd(t, q) / pgcd(t, q, s)."""
    return math.gcd(t, q) // math.gcd(math.gcd(t, q), s)


def lower_bound_thm22(t, q, s):
    """
    Borne t(t+q)(t+s)+ms pour (tx+qy=z, tx+sy=z) avec q >= s >= t >= 1.
    """
    _positive(t=t)
    _require(s >= t, f"s >= t non respecté: s={s}, t={t}")
    _require(q >= s, f"q >= s non respecté: q={q}, s={s}")
    m = thm22_multiplier(t, q, s)
    return checked(t * (t + q) * (t + s) + m * s, "borne thm22")


def exact_rr1(q, s):
    """
    Valeur exacte de RR(x+qy=z, x+sy=z) pour 1 <= s <= q.

    Returns:
        int: 2q + 2*floor((q+1)/2) + 1 si s = 1, (q+1)(s+1)+s sinon
    """
    _positive(s=s)
    _require(q >= s, f"q >= s non respecté: q={q}, s={s}")
    if s == 1:
        return checked(2 * q + 2 * ((q + 1) // 2) + 1, "valeur exacte")
    return checked((q + 1) * (s + 1) + s, "valeur exacte")


def exact_multivar_rr1(a, b):
    """
    Valeur exacte pour (x + sum a_i y_i = z, x + sum b_i y_i = z).

    Args:
        a (Sequence[int]): Coefficients a_i (positifs)
        b (Sequence[int]): Coefficients b_i (positifs)

    Returns:
        int: exact_rr1(sum a, sum b)
    """
    _require(len(a) >= 1 and len(b) >= 1, "Au moins un coefficient de chaque côté")
    _require(all(x >= 1 for x in a) and all(x >= 1 for x in b), "Coefficients positifs requis")
    Q, S = sum(a), sum(b)
    _require(Q >= S >= 1, f"somme(a) >= somme(b) >= 1 non respecté: {Q}, {S}")
    return exact_rr1(Q, S)


def diagonal_exact(t, q):
    """Nombre de Rado diagonal t*q^2 + (2t^2+1)*q + t^3."""
    _positive(t=t, q=q)
    return checked(t * q * q + (2 * t * t + 1) * q + t ** 3, "valeur diagonale")


def lower_bound_anomalous(t):
    """Borne 6t^3+2t^2+4t pour la paire (tx+(2t+1)y=z, tx+ty=z), t >= 3."""
    _require(t >= 3, f"t >= 3 non respecté: t={t}")
    return checked(6 * t ** 3 + 2 * t * t + 4 * t, "borne anomale")


REMARK_T6_VALUE = 1393


def applicable_values(t, q, s):
    """
    Formules applicables au triplet (t, q, s) des formes tx+qy=z, tx+sy=z.

    Utilisé par la sous-commande bounds ; l'ordre est fixe et les valeurs
    confondues avec une formule plus générale ne sont pas répétées.

    Returns:
        list: Paires (nom, valeur)
    """
    values = []

    def attempt(name, fn, *args):
        try:
            values.append((name, fn(*args)))
        except PreconditionError:
            pass

    attempt("thm21", lower_bound_thm21, t, q, s)
    # thm22 n'apparaît que lorsqu'elle améliore thm21 (m > 1)
    if s >= t and thm22_multiplier(t, q, s) > 1:
        attempt("thm22", lower_bound_thm22, t, q, s)
    if t == 1:
        attempt("exact_rr1", exact_rr1, q, s)
    if q == s:
        attempt("diagonal_exact", diagonal_exact, t, q)
    if q == 2 * t + 1 and s == t:
        attempt("anomalous", lower_bound_anomalous, t)
    return values


def witness_candidates(e0, e1):
    """
    Constructions de témoins applicables à la paire (e0 rouge, e1 bleu).

    Les deux équations doivent être des formes somme de même plus petit
    coefficient t. Les constructions sont énoncées pour q >= s ; si la paire
    est donnée dans l'autre sens, flip vaut True et le témoin s'obtient en
    échangeant les couleurs de celui de (e1, e0).

    Returns:
        tuple: (flip, (t, q, s), [(nom, N certifié)]), ou (False, None, [])
    """
    f0 = SumForm.from_equation(e0)
    f1 = SumForm.from_equation(e1)
    if f0 is None or f1 is None or f0.t != f1.t:
        return False, None, []

    t, q, s = f0.t, f0.rest, f1.rest
    flip = q < s
    if flip:
        q, s = s, q
        f0, f1 = f1, f0

    candidates = []
    three_var = len(f0.b) == 2 and len(f1.b) == 2
    if three_var and q >= s >= t:
        candidates.append(("thm22", lower_bound_thm22(t, q, s)))
        if t >= 3 and q == 2 * t + 1 and s == t:
            candidates.append(("anomalous", lower_bound_anomalous(t)))
        if (t, q, s) == (6, 13, 6):
            candidates.append(("remark-t6", REMARK_T6_VALUE))
    if t == 1 and s == 1:
        candidates.append(("gamma", exact_rr1(q, 1)))
    if s >= t:
        candidates.append(("thm21", lower_bound_thm21(t, q, s)))
    return flip, (t, q, s), candidates


def best_lower_bound(e0, e1):
    """
    Meilleure borne inférieure certifiée par une construction, ou 2.

    Avec t = 1 la borne retenue coïncide avec la valeur exacte (gamma pour
    s = 1, thm21 sinon) ; dans le cas diagonal, thm22 coïncide avec
    diagonal_exact.

    Args:
        e0 (LinearEquation): Équation à éviter en rouge
        e1 (LinearEquation): Équation à éviter en bleu

    Returns:
        tuple: (nom, valeur)
    """
    _, _, candidates = witness_candidates(e0, e1)
    best = ("trivial", 2)
    for name, value in candidates:
        if value > best[1]:
            best = (name, value)
    return best
