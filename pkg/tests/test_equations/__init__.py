"""
Package pour les tests des équations linéaires.
"""
