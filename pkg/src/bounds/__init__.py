"""
Package pour les formules fermées (bornes inférieures et valeurs exactes).
"""
