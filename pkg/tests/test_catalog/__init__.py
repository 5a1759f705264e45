"""
Package pour les tests du catalogue et de la table.
"""
