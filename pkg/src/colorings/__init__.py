"""
Package pour les coloriages de [1, N] et les témoins de bornes inférieures.
"""

from src.colorings.coloring import (
    UNSET,
    Color,
    Coloring,
    PartialColoring,
    load_coloring,
    read_coloring,
    save_coloring,
    write_coloring,
)
