"""
Package pour les tests des coloriages et des témoins.
"""
