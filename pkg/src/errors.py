"""
Exceptions du moteur de nombres de Rado.

Chaque exception hérite de l'exception standard correspondante afin que
l'appelant puisse attraper l'une ou l'autre.
"""


class EquationParseError(ValueError):
    """Texte d'équation illisible."""


class EmptyEquationError(EquationParseError):
    """Liste de coefficients vide."""


class ZeroCoefficientError(EquationParseError):
    """Coefficient nul dans le texte d'une équation."""


class InvalidTokenError(EquationParseError):
    """Jeton qui n'est pas un entier décimal signé."""


class InvalidEquationError(ValueError):
    """Équation qui viole un invariant (coefficient nul, arité, signes)."""


class PreconditionError(ValueError):
    """Hypothèse d'un théorème ou d'une opération non respectée."""


class ResourceCapError(RuntimeError):
    """Plafond de ressources dépassé (énumération, oracle exhaustif)."""


class CheckedArithmeticError(OverflowError):
    """Dépassement de l'arithmétique entière 64 bits signée."""


class ColoringFormatError(ValueError):
    """Fichier de coloriage mal formé."""


class ConfigurationError(ValueError):
    """Surcharge de configuration invalide."""


class SelfCheckError(RuntimeError):
    """Un témoin produit par le programme ne passe pas la vérification."""


class EquationArityError(EquationParseError):
    """Moins de deux coefficients dans le texte."""
