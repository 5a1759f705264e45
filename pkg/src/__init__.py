"""
Package principal du moteur de nombres de Rado hors-diagonale.
"""

__version__ = "0.1.0"
