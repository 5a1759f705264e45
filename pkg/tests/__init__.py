"""
Package pour les tests du moteur de nombres de Rado.
"""
