"""
Module pour le catalogue des résultats (JSON Lines, ajout seulement).

Chaque ligne est un objet JSON dont les clés suivent FIELDS, dans cet ordre ;
les champs optionnels absents sont omis.
"""

import os
import json
import logging
import threading
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from src import __version__, config

# Configuration du logger
logger = logging.getLogger(__name__)

FIELDS = (
    "e0",
    "e1",
    "t",
    "q",
    "s",
    "value",
    "status",
    "witness_path",
    "elapsed_ms",
    "decisions",
    "propagations",
    "conflicts",
    "tool_version",
)

STATUSES = ("exact", "lower_bound", "upper_bound", "indeterminate")

TOOL_VERSION = f"rado-{__version__}"


@dataclass
class CatalogEntry:
    """Un enregistrement (paire d'équations, valeur)."""

    e0: str
    e1: str
    value: int
    status: str
    elapsed_ms: int = 0
    decisions: int = 0
    propagations: int = 0
    conflicts: int = 0
    t: Optional[int] = None
    q: Optional[int] = None
    s: Optional[int] = None
    witness_path: Optional[str] = None
    tool_version: str = TOOL_VERSION

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"Statut inconnu: {self.status}")
        if self.status == "exact" and not self.witness_path:
            raise ValueError("Une entrée exacte doit avoir un fichier témoin")

    @property
    def key(self):
        return (self.e0, self.e1)

    def to_dict(self):
        data = {}
        for name in FIELDS:
            value = getattr(self, name)
            if value is not None:
                data[name] = value
        return data

    def to_json(self):
        """Sérialise en une ligne JSON, clés dans l'ordre de FIELDS."""
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(", ", ": "))

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - set(FIELDS)
        if unknown:
            raise ValueError(f"Champs inconnus: {sorted(unknown)}")
        return cls(**data)


def witness_filename(e0_text, e1_text, N):
    """Nom déterministe du fichier témoin de [1, N] pour une paire."""

    def slug(text):
        return text.replace("-", "m").replace(",", "_")

    return f"rr_{slug(e0_text)}__{slug(e1_text)}__N{N}.col"


class Catalog:
    """Catalogue JSON Lines avec un seul écrivain à la fois."""

    def __init__(self, path: Optional[str] = None):
        self.path = path or config.CATALOG_CONFIG["PATH"]
        self._lock = threading.Lock()

    def append(self, entry: CatalogEntry):
        """Ajoute une entrée en fin de fichier."""
        line = entry.to_json()
        with self._lock:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as f:
                f.write(line + "\n")
        logger.debug(f"Entrée ajoutée au catalogue {self.path}: {entry.e0} / {entry.e1} = {entry.value}")

    def __iter__(self) -> Iterator[CatalogEntry]:
        if not os.path.exists(self.path):
            return
        with open(self.path, "r", encoding="utf-8") as f:
            for number, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield CatalogEntry.from_dict(json.loads(line))
                except (ValueError, TypeError) as e:
                    logger.warning(f"Ligne {number} du catalogue ignorée: {e}")

    def entries(self) -> List[CatalogEntry]:
        return list(self)

    def exact_values(self) -> Dict[Tuple[str, str], CatalogEntry]:
        """Dernière entrée exacte par paire."""
        found = {}
        for entry in self:
            if entry.status == "exact":
                found[entry.key] = entry
        return found
