"""
Tests unitaires pour les règles de forçage littérales.
"""

import unittest

import numpy as np

from src.equations.linear import equation_pair_from_f_form
from src.errors import PreconditionError
from src.solver.clauses import ClauseDatabase
from src.solver.propagation import Conflict, SolverState, propagate
from src.solver.schaal import Contradiction, schaal_fixpoint, schaal_force, window_size


class TestSchaalForce(unittest.TestCase):
    """Tests pour un tour de règles."""

    def test_single_red_forces_nothing(self):
        self.assertEqual(schaal_force(1, 2, 1, {1}, set(), 9), (set(), set()))

    def test_red_contradiction(self):
        outcome = schaal_force(1, 2, 1, {1, 3}, set(), 9)
        self.assertEqual(outcome, Contradiction(frozenset({1})))

    def test_blue_contradiction(self):
        outcome = schaal_force(1, 1, 1, set(), {1, 2}, 5)
        self.assertIsInstance(outcome, Contradiction)
        self.assertIn(1, outcome.elements)

    def test_forcing(self):
        # 1 + 2*2 = 5 et 3 + 2*1 = 5
        self.assertEqual(schaal_force(1, 2, 1, {1, 5}, set(), 9), (set(), {2, 3}))

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            schaal_force(1, 2, 1, {1}, {1}, 9)
        with self.assertRaises(PreconditionError):
            schaal_force(1, 2, 1, {10}, set(), 9)
        with self.assertRaises(PreconditionError):
            schaal_force(0, 2, 1, set(), set(), 9)

    def test_window_size(self):
        self.assertEqual(window_size(1, 2, 1), 7)
        self.assertEqual(window_size(2, 3, 2), 42)
        self.assertEqual(window_size(1, 3, 2), 14)


class TestSchaalFixpoint(unittest.TestCase):
    """Le point fixe des règles coïncide avec la propagation descendante."""

    def test_fixpoint_rounds(self):
        result = schaal_fixpoint(1, 2, 1, {1, 5}, set(), 9)
        self.assertIsNone(result.contradiction)
        self.assertEqual(result.blue, {2, 3})
        self.assertEqual(result.red, {1, 5})
        self.assertEqual(result.rounds, 2)

    def test_agrees_with_propagation(self):
        rng = np.random.default_rng(2024)
        for t, q, s in [(1, 2, 1), (2, 3, 2), (1, 3, 2)]:
            e0, e1 = equation_pair_from_f_form(t, q, s)
            N = window_size(t, q, s)
            database = ClauseDatabase(e0, e1, subsumption=False)
            database.extend_to(N)
            for _ in range(200):
                colors = rng.choice(3, size=N, p=[0.15, 0.15, 0.7])
                R = {int(i) + 1 for i in np.flatnonzero(colors == 0)}
                B = {int(i) + 1 for i in np.flatnonzero(colors == 1)}
                with self.subTest(t=t, q=q, s=s, R=sorted(R), B=sorted(B)):
                    fixpoint = schaal_fixpoint(t, q, s, R, B, N)
                    state = SolverState(database, N)
                    state.seed(reds=R, blues=B)
                    outcome = propagate(state, downward_only=True)
                    self.assertEqual(isinstance(outcome, Conflict), fixpoint.contradiction is not None)
                    if fixpoint.contradiction is None:
                        self.assertEqual(state.red_set(), fixpoint.red)
                        self.assertEqual(state.blue_set(), fixpoint.blue)


if __name__ == '__main__':
    unittest.main()
