"""
Package pour le catalogue des résultats et la reproduction de la table.
"""

from src.catalog.catalog import Catalog, CatalogEntry, witness_filename
