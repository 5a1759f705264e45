"""
Tests unitaires pour l'oracle exhaustif.
"""

import unittest

from src.equations.linear import equation_pair_from_f_form, parse_equation
from src.errors import PreconditionError, ResourceCapError
from src.oracle.exhaustive import exhaustive_rr, exhaustive_sat
from src.oracle.validity import check_valid

SCHUR = parse_equation("1,1,-1")


class TestExhaustiveSat(unittest.TestCase):
    """Tests pour exhaustive_sat."""

    def test_schur(self):
        self.assertEqual(exhaustive_sat(SCHUR, SCHUR, 4).to_string(), "RBBR")
        self.assertIsNone(exhaustive_sat(SCHUR, SCHUR, 5))

    def test_result_is_valid(self):
        e0, e1 = equation_pair_from_f_form(1, 3, 1)
        for N in range(1, 11):
            coloring = exhaustive_sat(e0, e1, N)
            self.assertIsNotNone(coloring)
            self.assertTrue(check_valid(coloring, e0, e1).valid)
            self.assertTrue(check_valid(coloring.flipped(), e1, e0).valid)

    def test_monotone(self):
        e0, e1 = equation_pair_from_f_form(1, 2, 1)
        results = [exhaustive_sat(e0, e1, N) is not None for N in range(1, 12)]
        first_unsat = results.index(False)
        self.assertFalse(any(results[first_unsat:]))

    def test_bounds(self):
        with self.assertRaises(PreconditionError):
            exhaustive_sat(SCHUR, SCHUR, 0)
        with self.assertRaises(ResourceCapError):
            exhaustive_sat(SCHUR, SCHUR, 26)
        with self.assertRaises(ResourceCapError):
            exhaustive_sat(SCHUR, SCHUR, 8, max_n=6)


class TestExhaustiveRR(unittest.TestCase):
    """Tests pour exhaustive_rr."""

    def test_values(self):
        self.assertEqual(exhaustive_rr(SCHUR, SCHUR, 12), 5)
        self.assertEqual(exhaustive_rr(parse_equation("1,2,-1"), SCHUR, 12), 7)
        self.assertEqual(exhaustive_rr(*equation_pair_from_f_form(1, 2, 2), 12), 11)
        self.assertEqual(exhaustive_rr(parse_equation("1,3,-1"), SCHUR, 12), 11)

    def test_symmetry(self):
        e0, e1 = equation_pair_from_f_form(1, 3, 2)
        self.assertEqual(exhaustive_rr(e0, e1, 20), exhaustive_rr(e1, e0, 20))

    def test_cap_not_reached(self):
        self.assertIsNone(exhaustive_rr(parse_equation("1,3,-1"), SCHUR, 10))

    def test_cap_errors(self):
        with self.assertRaises(ResourceCapError):
            exhaustive_rr(SCHUR, SCHUR, 30)
        with self.assertRaises(PreconditionError):
            exhaustive_rr(SCHUR, SCHUR, 0)


if __name__ == '__main__':
    unittest.main()
