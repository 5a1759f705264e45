"""
Tests unitaires pour les clauses et la base de clauses.
"""

import unittest

from src.colorings.coloring import Color
from src.equations.linear import equation_pair_from_f_form, parse_equation
from src.solver.clauses import Clause, ClauseDatabase, build_clauses

SCHUR = parse_equation("1,1,-1")


class TestClause(unittest.TestCase):
    """Tests pour la classe Clause."""

    def test_members_normalized(self):
        clause = Clause(Color.BLUE, (4, 1, 1))
        self.assertEqual(clause.members, (1, 4))
        self.assertEqual(clause.maximum, 4)
        self.assertEqual(len(clause), 2)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            Clause(Color.RED, ())
        with self.assertRaises(ValueError):
            Clause(Color.RED, (0, 2))

    def test_ordering(self):
        self.assertLess(Clause(Color.RED, (2, 4)), Clause(Color.BLUE, (1, 4)))


class TestBuildClauses(unittest.TestCase):
    """Tests pour build_clauses."""

    def test_example(self):
        clauses = build_clauses(parse_equation("1,3,-1"), SCHUR, 4)
        expected = {
            Clause(Color.BLUE, (1, 4)),
            Clause(Color.RED, (1, 2)),
            Clause(Color.RED, (1, 2, 3)),
            Clause(Color.RED, (1, 3, 4)),
            Clause(Color.RED, (2, 4)),
        }
        self.assertEqual(clauses, expected)

    def test_n_one(self):
        for t, q, s in [(1, 1, 1), (2, 3, 2), (3, 7, 3)]:
            self.assertEqual(build_clauses(*equation_pair_from_f_form(t, q, s), 1), set())


class TestClauseDatabase(unittest.TestCase):
    """Tests pour la base incrémentale."""

    def test_subsumption(self):
        database = ClauseDatabase(parse_equation("1,3,-1"), SCHUR, subsumption=True)
        self.assertEqual(database.prefix_length(4), 4)
        self.assertEqual(database.subsumed, 1)
        self.assertEqual(
            database.clauses,
            [
                Clause(Color.RED, (1, 2)),
                Clause(Color.RED, (2, 4)),
                Clause(Color.BLUE, (1, 4)),
                Clause(Color.RED, (1, 3, 4)),
            ],
        )
        self.assertEqual(database.falsified_by[Color.BLUE][2], [0, 1])
        self.assertEqual(database.falsified_by[Color.RED][1], [2])

    def test_without_subsumption_matches_build(self):
        e0, e1 = equation_pair_from_f_form(1, 2, 1)
        database = ClauseDatabase(e0, e1, subsumption=False)
        self.assertEqual(set(database.clauses_upto(12)), build_clauses(e0, e1, 12))

    def test_prefix_is_ordered_by_maximum(self):
        e0, e1 = equation_pair_from_f_form(2, 3, 2)
        database = ClauseDatabase(e0, e1)
        database.extend_to(30)
        for N in range(1, 31):
            limit = database.prefix_length(N)
            self.assertTrue(all(c.maximum <= N for c in database.clauses[:limit]))
            self.assertTrue(all(c.maximum > N for c in database.clauses[limit:]))

    def test_falsified_by_sorted(self):
        database = ClauseDatabase(SCHUR, SCHUR, subsumption=False)
        database.extend_to(20)
        for color in (Color.RED, Color.BLUE):
            for ids in database.falsified_by[color]:
                self.assertEqual(ids, sorted(ids))

    def test_incremental_equals_direct(self):
        e0, e1 = equation_pair_from_f_form(1, 3, 2)
        stepwise = ClauseDatabase(e0, e1)
        for N in range(1, 16):
            stepwise.prefix_length(N)
        direct = ClauseDatabase(e0, e1)
        direct.extend_to(15)
        self.assertEqual(stepwise.clauses, direct.clauses)

    def test_positions(self):
        database = ClauseDatabase(parse_equation("1,3,-1"), SCHUR)
        self.assertEqual(database.positions(1), [])
        self.assertEqual(database.positions(4), [1, 2, 3, 4])


if __name__ == '__main__':
    unittest.main()
