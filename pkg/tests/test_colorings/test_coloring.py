"""
Tests unitaires pour les coloriages et leur format de fichier.
"""

import os
import tempfile
import unittest

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
from src.colorings.witnesses import witness_gamma_s1, witness_remark_t6, witness_thm22
from src.errors import ColoringFormatError


class TestColoring(unittest.TestCase):
    """Tests pour la classe Coloring."""

    def setUp(self):
        """Configuration avant chaque test."""
        self.schur = Coloring.from_string("BRRB")

    def test_colors(self):
        self.assertEqual(self.schur.N, 4)
        self.assertEqual(self.schur.color(1), Color.BLUE)
        self.assertEqual(self.schur.color(2), Color.RED)
        self.assertEqual(self.schur.red_set(), {2, 3})
        self.assertEqual(self.schur.blue_set(), {1, 4})
        with self.assertRaises(IndexError):
            self.schur.color(5)

    def test_immutable(self):
        with self.assertRaises(ValueError):
            self.schur.assignment[0] = 0

    def test_flipped_and_restrict(self):
        self.assertEqual(self.schur.flipped().to_string(), "RBBR")
        self.assertEqual(self.schur.restrict(2).to_string(), "BR")
        with self.assertRaises(ValueError):
            self.schur.restrict(5)

    def test_from_red_set(self):
        self.assertEqual(Coloring.from_red_set(4, [2, 3, 9]), self.schur)

    def test_equality_and_hash(self):
        other = Coloring([1, 0, 0, 1])
        self.assertEqual(self.schur, other)
        self.assertEqual(hash(self.schur), hash(other))
        self.assertNotEqual(self.schur, self.schur.flipped())

    def test_color_opposite(self):
        self.assertEqual(Color.RED.opposite, Color.BLUE)
        self.assertEqual(Color.from_symbol("R"), Color.RED)
        with self.assertRaises(ColoringFormatError):
            Color.from_symbol("G")


class TestPartialColoring(unittest.TestCase):
    """Tests pour la classe PartialColoring."""

    def test_set_and_convert(self):
        partial = PartialColoring(3)
        self.assertEqual(partial.get(2), UNSET)
        partial.set(1, Color.BLUE)
        partial.set(2, Color.RED)
        self.assertFalse(partial.is_complete())
        with self.assertRaises(ValueError):
            partial.to_coloring()
        self.assertEqual(partial.to_coloring(fill=Color.RED).to_string(), "BRR")
        partial.set(3, Color.BLUE)
        self.assertTrue(partial.is_complete())
        self.assertEqual(partial.to_coloring().to_string(), "BRB")
        partial.unset(3)
        self.assertEqual(partial.blue_set(), {1})

    def test_round_trip(self):
        coloring = Coloring.from_string("RBBRB")
        self.assertEqual(PartialColoring.from_coloring(coloring).to_coloring(), coloring)


class TestColoringFile(unittest.TestCase):
    """Tests pour le format "# rado-coloring v1"."""

    def test_read(self):
        coloring = read_coloring(b"# rado-coloring v1\nN 4\nBRRB\n")
        self.assertEqual(coloring.to_string(), "BRRB")

    def test_write(self):
        self.assertEqual(write_coloring(witness_gamma_s1(1)), b"# rado-coloring v1\nN 4\nBRRB\n")

    def test_length_mismatch(self):
        with self.assertRaises(ColoringFormatError) as ctx:
            read_coloring(b"# rado-coloring v1\nN 3\nBRRB\n")
        self.assertIn("Longueur", str(ctx.exception))

    def test_malformed(self):
        """Teste que chaque défaut de format est rejeté."""
        for data in [
            b"# rado-coloring v2\nN 4\nBRRB\n",
            b"# rado-coloring v1\nN 4\nBRXB\n",
            b"# rado-coloring v1\nN 4\nBRRB",
            b"# rado-coloring v1\nN four\nBRRB\n",
            b"# rado-coloring v1\nN 4\nBRRB\n\n",
            "# rado-coloring v1\nN 1\nRé\n".encode("utf-8"),
        ]:
            with self.assertRaises(ColoringFormatError):
                read_coloring(data)

    def test_witness_round_trip(self):
        for coloring in [witness_gamma_s1(5), witness_thm22(3, 6, 4), witness_remark_t6()]:
            self.assertEqual(read_coloring(write_coloring(coloring)), coloring)

    def test_save_and_load(self):
        coloring = witness_gamma_s1(3)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "gamma.col")
            save_coloring(coloring, path)
            self.assertEqual(load_coloring(path), coloring)


if __name__ == '__main__':
    unittest.main()
