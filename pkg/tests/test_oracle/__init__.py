"""
Package pour les tests de l'oracle exhaustif.
"""
