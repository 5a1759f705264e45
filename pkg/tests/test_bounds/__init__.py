"""
Package pour les tests des formules fermées.
"""
