"""
Configuration du moteur de nombres de Rado hors-diagonale.
Modifier ce fichier, ou fournir un fichier YAML via --config, pour ajuster
les paramètres.
"""

import os
import logging

import yaml

from src.errors import ConfigurationError

logger = logging.getLogger(__name__)

# Répertoire du projet
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# Énumération des solutions
EQUATION_CONFIG = {
    "MAX_TUPLES": 10 ** 8,   # Nombre maximal de tuples prévus avant refus
}

# Oracle exhaustif
ORACLE_CONFIG = {
    "MAX_N": 25,             # Taille maximale de l'intervalle pour la force brute
    "MAX_VIOLATIONS": 16,    # Tuples violants conservés par équation
}

# Solveur par propagation
SOLVER_CONFIG = {
    "TIMEOUT": 300.0,        # Délai par (instance, N) en secondes
    "TOTAL_BUDGET": None,    # Budget global de compute_rr (None: illimité)
    "SCAN_CAP": 5000,        # Plus grand N essayé par compute_rr
    "SUBSUMPTION": True,     # Supprimer les clauses subsumées
    "CLOCK_CHECK_INTERVAL": 256,  # Décisions entre deux lectures de l'horloge
}

# Catalogue des résultats
CATALOG_CONFIG = {
    "PATH": "./rado-catalog.jsonl",
    "WITNESS_DIR": "./witnesses",
}

# Reproduction de la table
TABLE_CONFIG = {
    "DATA_FILE": os.path.join(PROJECT_ROOT, "src", "data", "table1.yaml"),
    "Q_MAX": 10,             # Plus grand q parcouru par défaut
    "BUDGET_SECONDS": 300.0, # Budget par entrée
    "WORKERS": 1,            # Entrées calculées en parallèle
}

# Configuration de la journalisation
LOGGING_CONFIG = {
    "LEVEL": "INFO",         # Niveau de journalisation (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    "FILE": None,            # Fichier journal optionnel (None: erreur standard seulement)
    "MAX_SIZE": 10 * 1024 * 1024,  # Taille maximale du fichier journal (10 Mo)
    "BACKUP_COUNT": 5,       # Nombre de fichiers de sauvegarde à conserver
}

# Mode débogage
DEBUG = False

_SECTIONS = {
    "equation": EQUATION_CONFIG,
    "oracle": ORACLE_CONFIG,
    "solver": SOLVER_CONFIG,
    "catalog": CATALOG_CONFIG,
    "table": TABLE_CONFIG,
    "logging": LOGGING_CONFIG,
}


def load_overrides(path):
    """
    Fusionne un fichier YAML dans les dictionnaires de configuration.

    Le fichier contient des sections (equation, oracle, solver, catalog,
    table, logging) dont les clés reprennent celles des dictionnaires.

    Args:
        path (str): Chemin du fichier YAML

    Returns:
        dict: Les surcharges appliquées, par section
    """
    global DEBUG

    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}

    if not isinstance(data, dict):
        raise ConfigurationError(f"Le fichier {path} doit contenir un dictionnaire")

    applied = {}
    for section, values in data.items():
        if section == "debug":
            DEBUG = bool(values)
            continue
        target = _SECTIONS.get(section)
        if target is None:
            raise ConfigurationError(f"Section de configuration inconnue: {section}")
        if not isinstance(values, dict):
            raise ConfigurationError(f"La section {section} doit être un dictionnaire")
        for key, value in values.items():
            key = key.upper()
            if key not in target:
                raise ConfigurationError(f"Clé inconnue dans {section}: {key}")
            target[key] = value
        applied[section] = dict(values)

    logger.info(f"Configuration surchargée depuis {path}")
    return applied
