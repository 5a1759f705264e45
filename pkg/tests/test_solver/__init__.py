"""
Package pour les tests du solveur.
"""
