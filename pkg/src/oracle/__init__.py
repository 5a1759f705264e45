"""
Package pour l'oracle: vérification exacte des coloriages et recherche
exhaustive sur de petits intervalles.
"""

from src.oracle.validity import ValidityReport, check_valid
from src.oracle.exhaustive import exhaustive_rr, exhaustive_sat
