"""
Module pour la représentation des équations linéaires homogènes.

Une équation est un vecteur de coefficients (a1, ..., an) représentant
a1*x1 + ... + an*xn = 0 sur les entiers strictement positifs.
"""

import re
import math
import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from src.errors import (
    CheckedArithmeticError,
    EmptyEquationError,
    EquationArityError,
    InvalidEquationError,
    InvalidTokenError,
    PreconditionError,
    ZeroCoefficientError,
)

# Configuration du logger
logger = logging.getLogger(__name__)

INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1

_TOKEN = re.compile(r"[+-]?[0-9]+")


def checked(value, what="valeur"):
    """
    Vérifie qu'un entier tient sur 64 bits signés.

    Args:
        value (int): Valeur calculée
        what (str): Nom de la quantité, pour le message d'erreur

    Returns:
        int: La valeur inchangée
    """
    if value < INT64_MIN or value > INT64_MAX:
        raise CheckedArithmeticError(f"Dépassement 64 bits pour {what}: {value}")
    return value


@dataclass(frozen=True)
class LinearEquation:
    """Équation a1*x1 + ... + an*xn = 0, chaque xi entier positif."""

    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 2:
            raise InvalidEquationError(f"Au moins deux coefficients requis: {coeffs}")
        for c in coeffs:
            if c == 0:
                raise InvalidEquationError(f"Coefficient nul dans {coeffs}")
            checked(c, "coefficient")

    @property
    def n(self):
        """Nombre de variables."""
        return len(self.coeffs)

    @property
    def mixed_sign_3var(self):
        """Vrai si l'équation a au moins 3 variables et des coefficients des deux signes."""
        return (
            self.n >= 3
            and any(c > 0 for c in self.coeffs)
            and any(c < 0 for c in self.coeffs)
        )

    def evaluate(self, values):
        """
        Substitue des valeurs dans l'équation.

        Args:
            values (Sequence[int]): Une valeur par variable

        Returns:
            int: La somme a1*x1 + ... + an*xn
        """
        if len(values) != self.n:
            raise ValueError(f"{self.n} valeurs attendues, {len(values)} reçues")
        total = 0
        for c, v in zip(self.coeffs, values):
            total = checked(total + checked(c * v, "produit"), "somme partielle")
        return total

    def is_solution(self, values):
        """Indique si le tuple résout l'équation sur les entiers positifs."""
        return all(v >= 1 for v in values) and self.evaluate(values) == 0

    def negated(self):
        """Retourne l'équation multipliée par -1 (mêmes solutions)."""
        return LinearEquation(tuple(-c for c in self.coeffs))

    def __str__(self):
        return render_equation(self)


@dataclass(frozen=True)
class FForm:
    """Équation t*x + j*y = z, soit LinearEquation (t, j, -1)."""

    t: int
    j: int

    def __post_init__(self):
        if self.t < 1:
            raise PreconditionError(f"t >= 1 non respecté: t={self.t}")
        if self.j < 1:
            raise PreconditionError(f"j >= 1 non respecté: j={self.j}")

    def to_equation(self):
        """Convertit en LinearEquation (t, j, -1)."""
        return LinearEquation((self.t, self.j, -1))

    @classmethod
    def from_equation(cls, eq):
        """
        Reconnaît la forme t*x + j*y = z.

        Args:
            eq (LinearEquation): Équation source

        Returns:
            FForm ou None si l'équation n'a pas exactement la forme (t, j, -1)
        """
        if eq.n == 3 and eq.coeffs[2] == -1 and eq.coeffs[0] > 0 and eq.coeffs[1] > 0:
            return cls(eq.coeffs[0], eq.coeffs[1])
        return None


@dataclass(frozen=True)
class SumForm:
    """
    Équation b1*x1 + ... + b_{k-1}*x_{k-1} = x_k avec tous les bi positifs.

    t est le plus petit bi et q la somme des autres, comme dans la borne
    inférieure générale.
    """

    b: Tuple[int, ...]

    @property
    def t(self):
        return min(self.b)

    @property
    def rest(self):
        return sum(self.b) - self.t

    @classmethod
    def from_equation(cls, eq):
        """Retourne la forme somme de l'équation, ou None."""
        *head, last = eq.coeffs
        if last == -1 and len(head) >= 2 and all(c > 0 for c in head):
            return cls(tuple(head))
        return None


@dataclass(frozen=True)
class CanonicalForm:
    """Forme canonique a*x + b*y = c*z."""

    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            if getattr(self, name) < 1:
                raise InvalidEquationError(f"{name} >= 1 requis dans la forme canonique")

    def to_equation(self):
        return LinearEquation((self.a, self.b, -self.c))


def _orient(eq):
    """
    Choisit l'orientation des signes pour la réduction canonique.

    Returns:
        tuple: (signe, indices positifs, indices négatifs) après orientation,
        le côté positif comptant au moins deux termes
    """
    if not eq.mixed_sign_3var:
        raise InvalidEquationError(
            f"Réduction impossible: au moins 3 variables et les deux signes requis ({eq})"
        )
    pos = [i for i, c in enumerate(eq.coeffs) if c > 0]
    neg = [i for i, c in enumerate(eq.coeffs) if c < 0]
    if len(pos) >= 2:
        return 1, pos, neg
    # Un seul positif et au moins deux négatifs: on retourne l'équation
    return -1, neg, pos


def normalize(eq):
    """
    Réduit une équation à signes mixtes vers la forme a*x + b*y = c*z.

    Les positifs alpha_1..alpha_k (k >= 2, dans l'ordre des coefficients)
    donnent a = alpha_1 + ... + alpha_{k-1} et b = alpha_k ; les négatifs
    donnent c = somme des beta_i.

    Args:
        eq (LinearEquation): Équation à signes mixtes, au moins 3 variables

    Returns:
        CanonicalForm: La forme canonique
    """
    sign, pos, neg = _orient(eq)
    alphas = [sign * eq.coeffs[i] for i in pos]
    betas = [-sign * eq.coeffs[i] for i in neg]
    a = checked(sum(alphas[:-1]), "a")
    b = alphas[-1]
    c = checked(sum(betas), "c")
    return CanonicalForm(a, b, c)


def lift_solution(eq, solution):
    """
    Relève une solution (x, y, z) de la forme canonique en solution de eq.

    Les k-1 premiers positifs prennent x, le dernier positif prend y et
    tous les négatifs prennent z.

    Args:
        eq (LinearEquation): Équation source
        solution (tuple): Solution (x, y, z) de normalize(eq)

    Returns:
        tuple: Une valeur par variable de eq
    """
    x, y, z = solution
    _, pos, neg = _orient(eq)
    values = [0] * eq.n
    for i in pos[:-1]:
        values[i] = x
    values[pos[-1]] = y
    for i in neg:
        values[i] = z
    return tuple(values)


def normalize_pair(e0, e1):
    """
    Réduit deux équations vers des formes canoniques de même coefficient en z.

    Args:
        e0 (LinearEquation): Première équation
        e1 (LinearEquation): Seconde équation

    Returns:
        tuple: (CanonicalForm, CanonicalForm) partageant c = ppcm(c0, c1)
    """
    f0 = normalize(e0)
    f1 = normalize(e1)
    c = checked(f0.c * f1.c // math.gcd(f0.c, f1.c), "ppcm")
    k0 = c // f0.c
    k1 = c // f1.c
    return (
        CanonicalForm(checked(f0.a * k0), checked(f0.b * k0), c),
        CanonicalForm(checked(f1.a * k1), checked(f1.b * k1), c),
    )


def rr_exists_guaranteed(e0, e1):
    """Vrai si les deux équations ont au moins 3 variables et des signes mixtes."""
    return e0.mixed_sign_3var and e1.mixed_sign_3var


def parse_equation(text):
    """
    Lit une équation au format "2,3,-1".

    Args:
        text (str): Coefficients séparés par des virgules

    Returns:
        LinearEquation: L'équation lue
    """
    if text is None or text.strip() == "":
        raise EmptyEquationError("Liste de coefficients vide")
    coeffs: List[int] = []
    for token in text.split(","):
        token = token.strip()
        if not _TOKEN.fullmatch(token):
            raise InvalidTokenError(f"Jeton non entier: {token!r}")
        value = int(token)
        if value == 0:
            raise ZeroCoefficientError(f"Coefficient nul dans {text!r}")
        coeffs.append(value)
    try:
        return LinearEquation(tuple(coeffs))
    except InvalidEquationError as e:
        raise EquationArityError(str(e)) from e


def render_equation(eq):
    """Écrit les coefficients séparés par ',' sans espace."""
    return ",".join(str(c) for c in eq.coeffs)


def f_form_parameters(e0, e1) -> Optional[Tuple[int, int, int]]:
    """
    Retourne (t, q, s) si e0 = t*x+q*y=z et e1 = t*x+s*y=z, sinon None.
    """
    f0 = FForm.from_equation(e0)
    f1 = FForm.from_equation(e1)
    if f0 is None or f1 is None or f0.t != f1.t:
        return None
    return f0.t, f0.j, f1.j


def equation_pair_from_f_form(t, q, s) -> Tuple[LinearEquation, LinearEquation]:
    """Construit la paire (t*x+q*y=z, t*x+s*y=z)."""
    return FForm(t, q).to_equation(), FForm(t, s).to_equation()


def multivar_equation(a: Sequence[int]) -> LinearEquation:
    """Construit x + a1*y1 + ... + ak*yk = z."""
    return LinearEquation((1,) + tuple(a) + (-1,))
