"""
Module pour les 2-coloriages de [1, N] et leur format de fichier.

Rouge vaut 0 et bleu vaut 1 en interne ; les fichiers utilisent 'R' et 'B'.
La « première couleur » des équations (E0) est toujours le rouge.
"""

import logging
from enum import IntEnum
from typing import Iterable, List, Optional

import numpy as np

from src.errors import ColoringFormatError

# Configuration du logger
logger = logging.getLogger(__name__)

HEADER = "# rado-coloring v1"

UNSET = -1


class Color(IntEnum):
    """Les deux couleurs."""

    RED = 0
    BLUE = 1

    @property
    def opposite(self):
        return Color(1 - self.value)

    @property
    def symbol(self):
        return "R" if self is Color.RED else "B"

    @classmethod
    def from_symbol(cls, symbol):
        if symbol == "R":
            return cls.RED
        if symbol == "B":
            return cls.BLUE
        raise ColoringFormatError(f"Caractère de couleur invalide: {symbol!r}")


class Coloring:
    """Coloriage total et immuable de [1, N]."""

    def __init__(self, colors):
        """
        Initialise le coloriage.

        Args:
            colors (Iterable[int]): Couleur (0 ou 1) des positions 1..N dans l'ordre
        """
        array = np.array(list(colors), dtype=np.uint8)
        if array.size and array.max() > 1:
            raise ValueError("Les couleurs doivent valoir 0 (rouge) ou 1 (bleu)")
        array.setflags(write=False)
        self._colors = array

    @property
    def N(self):
        return int(self._colors.size)

    @property
    def assignment(self):
        """Tableau numpy en lecture seule, indice i pour la position i+1."""
        return self._colors

    def color(self, position):
        """Couleur de la position (1-indexée)."""
        if not 1 <= position <= self.N:
            raise IndexError(f"Position {position} hors de [1,{self.N}]")
        return Color(int(self._colors[position - 1]))

    def red_set(self):
        return {int(i) + 1 for i in np.flatnonzero(self._colors == Color.RED)}

    def blue_set(self):
        return {int(i) + 1 for i in np.flatnonzero(self._colors == Color.BLUE)}

    def flipped(self):
        """Échange rouge et bleu."""
        return Coloring(1 - self._colors)

    def restrict(self, M):
        """Restriction à [1, M]."""
        if not 0 <= M <= self.N:
            raise ValueError(f"Restriction à [1,{M}] impossible depuis [1,{self.N}]")
        return Coloring(self._colors[:M])

    def to_string(self):
        return "".join("R" if c == Color.RED else "B" for c in self._colors)

    @classmethod
    def from_string(cls, text):
        return cls(Color.from_symbol(ch) for ch in text)

    @classmethod
    def from_red_set(cls, N, reds):
        """Colorie en rouge les positions de reds et en bleu le reste de [1, N]."""
        colors = np.ones(N, dtype=np.uint8)
        for r in reds:
            if 1 <= r <= N:
                colors[r - 1] = Color.RED
        return cls(colors)

    def __eq__(self, other):
        return isinstance(other, Coloring) and np.array_equal(self._colors, other._colors)

    def __hash__(self):
        return hash(self._colors.tobytes())

    def __len__(self):
        return self.N

    def __repr__(self):
        text = self.to_string()
        if len(text) > 40:
            text = text[:37] + "..."
        return f"Coloring(N={self.N}, {text})"


class PartialColoring:
    """
    Coloriage partiel de [1, N], mutable et à propriétaire unique.

    Les positions non coloriées valent UNSET.
    """

    def __init__(self, N, values: Optional[Iterable[int]] = None):
        self.N = N
        self.values: List[int] = [UNSET] * (N + 1)
        if values is not None:
            for i, v in enumerate(values, start=1):
                self.values[i] = int(v)

    def get(self, position):
        return self.values[position]

    def set(self, position, color):
        self.values[position] = int(color)

    def unset(self, position):
        self.values[position] = UNSET

    def is_complete(self):
        return all(v != UNSET for v in self.values[1:])

    def red_set(self):
        return {i for i in range(1, self.N + 1) if self.values[i] == Color.RED}

    def blue_set(self):
        return {i for i in range(1, self.N + 1) if self.values[i] == Color.BLUE}

    def to_coloring(self, fill=None):
        """
        Convertit en coloriage total.

        Args:
            fill (Color): Couleur des positions non coloriées ; None exige un
                coloriage complet

        Returns:
            Coloring: Le coloriage total
        """
        colors = []
        for v in self.values[1:]:
            if v == UNSET:
                if fill is None:
                    raise ValueError("Coloriage partiel incomplet")
                v = int(fill)
            colors.append(v)
        return Coloring(colors)

    @classmethod
    def from_coloring(cls, coloring):
        return cls(coloring.N, coloring.assignment.tolist())


def write_coloring(coloring):
    """
    Sérialise un coloriage au format fichier.

    Args:
        coloring (Coloring): Coloriage à écrire

    Returns:
        bytes: Trois lignes ASCII terminées par un saut de ligne
    """
    text = f"{HEADER}\nN {coloring.N}\n{coloring.to_string()}\n"
    return text.encode("ascii")


def read_coloring(data):
    """
    Lit un coloriage au format fichier.

    Args:
        data (bytes): Contenu du fichier

    Returns:
        Coloring: Le coloriage lu
    """
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError:
        raise ColoringFormatError("Le fichier de coloriage doit être en ASCII") from None

    if not text.endswith("\n"):
        raise ColoringFormatError("Saut de ligne final manquant")
    lines = text[:-1].split("\n")
    if len(lines) != 3:
        raise ColoringFormatError(f"Trois lignes attendues, {len(lines)} trouvées")

    header, size_line, body = lines
    if header != HEADER:
        raise ColoringFormatError(f"En-tête invalide: {header!r}")

    parts = size_line.split(" ")
    if len(parts) != 2 or parts[0] != "N" or not parts[1].isdigit():
        raise ColoringFormatError(f"Ligne de taille invalide: {size_line!r}")
    N = int(parts[1])

    bad = set(body) - {"R", "B"}
    if bad:
        raise ColoringFormatError(f"Caractères hors de {{R,B}}: {''.join(sorted(bad))!r}")
    if len(body) != N:
        raise ColoringFormatError(
            f"Longueur incohérente: N={N} déclaré, {len(body)} couleurs lues"
        )
    return Coloring.from_string(body)


def load_coloring(path):
    """Lit un fichier de coloriage."""
    with open(path, "rb") as f:
        return read_coloring(f.read())


def save_coloring(coloring, path):
    """Écrit un fichier de coloriage."""
    with open(path, "wb") as f:
        f.write(write_coloring(coloring))
    logger.debug(f"Coloriage de [1,{coloring.N}] écrit dans {path}")
