"""
Tests unitaires pour les constructions de témoins.
"""

import unittest

from src.bounds import closed_forms
from src.colorings.coloring import Coloring
from src.colorings.witnesses import (
    REMARK_T6_SIZE,
    best_witness,
    build_witness,
    witness_anomalous,
    witness_gamma_s1,
    witness_remark_t6,
    witness_thm21,
    witness_thm22,
)
from src.equations.linear import equation_pair_from_f_form, multivar_equation, parse_equation
from src.errors import PreconditionError
from src.oracle.validity import check_valid


def _assert_valid(test, coloring, e0, e1):
    report = check_valid(coloring, e0, e1)
    test.assertTrue(report.valid, f"violations: {report.violations()[:4]}")


class TestConstructions(unittest.TestCase):
    """Tests des coloriages produits par chaque construction."""

    def test_gamma_examples(self):
        self.assertEqual(witness_gamma_s1(1).to_string(), "BRRB")
        self.assertEqual(witness_gamma_s1(3).to_string(), "BRBRRRRBRB")
        self.assertEqual(witness_gamma_s1(2).N, closed_forms.exact_rr1(2, 1) - 1)

    def test_thm21_schur(self):
        self.assertEqual(witness_thm21(1, 1, 1).to_string(), "BRRB")

    def test_thm22_red_sets(self):
        coloring = witness_thm22(2, 4, 3)
        self.assertEqual(coloring.N, 65)
        self.assertEqual(coloring.red_set(), set(range(5, 30)) | set(range(31, 66, 2)))
        self.assertIn(63, coloring.red_set())

        coloring = witness_thm22(3, 6, 4)
        self.assertEqual(coloring.N, 200)
        expected = set(range(7, 63)) | {i for i in range(63, 201) if i % 3 != 0}
        self.assertEqual(coloring.red_set(), expected)
        self.assertTrue({193, 197} <= coloring.red_set())

        coloring = witness_thm22(2, 4, 2)
        self.assertEqual(coloring.N, 49)
        self.assertEqual(coloring.red_set(), set(range(4, 24)))

    def test_thm22_stated_extras_alone_leave_blue_solution(self):
        """Les seuls ajouts t(t+q)(t+s)+is laissent 2*31+3*1 = 65 bleu."""
        e0, e1 = equation_pair_from_f_form(2, 4, 3)
        stated = Coloring.from_red_set(65, set(range(5, 30)) | {63})
        report = check_valid(stated, e0, e1)
        self.assertFalse(report.valid)
        self.assertIn((31, 1, 65), report.blue_violations)
        self.assertTrue(check_valid(witness_thm22(2, 4, 3), e0, e1).valid)

    def test_thm22_equals_thm21_when_m_is_one(self):
        for t, q, s in [(1, 3, 2), (2, 4, 2), (2, 5, 3), (3, 5, 4)]:
            self.assertEqual(closed_forms.thm22_multiplier(t, q, s), 1)
            self.assertEqual(witness_thm22(t, q, s), witness_thm21(t, q, s))

    def test_anomalous_red_set(self):
        coloring = witness_anomalous(3)
        self.assertEqual(coloring.N, 191)
        expected = {1, 2, 18} | set(range(21, 60)) | set(range(60, 121, 3))
        self.assertEqual(coloring.red_set(), expected)
        with self.assertRaises(PreconditionError):
            witness_anomalous(2)

    def test_remark_t6_size(self):
        coloring = witness_remark_t6()
        self.assertEqual(coloring.N, REMARK_T6_SIZE)
        self.assertEqual(coloring.N, 1392)
        self.assertIn(684, coloring.red_set())
        self.assertNotIn(685, coloring.red_set())
        self.assertTrue({53, 54, 55} <= coloring.red_set())

    def test_remark_t6_published_list_leaves_blue_solution(self):
        """Sans 53, 54 et 55 en rouge, 6*4+6*5 = 54 est bleue."""
        e0, e1 = equation_pair_from_f_form(6, 13, 6)
        published = witness_remark_t6().red_set() - {53, 54, 55}
        report = check_valid(Coloring.from_red_set(REMARK_T6_SIZE, published), e0, e1, limit=100)
        self.assertEqual(report.red_violations, [])
        self.assertEqual(report.blue_violations[0], (4, 5, 54))
        self.assertEqual(len(report.blue_violations), 30)

    def test_build_witness(self):
        self.assertEqual(build_witness("gamma", q=1), witness_gamma_s1(1))
        self.assertEqual(build_witness("thm22", 2, 4, 3), witness_thm22(2, 4, 3))
        with self.assertRaises(PreconditionError):
            build_witness("inconnu")


class TestWitnessValidity(unittest.TestCase):
    """Chaque témoin évite les solutions interdites."""

    def test_thm21_grid(self):
        for t in range(1, 4):
            for s in range(t, 7):
                for q in range(s, 7):
                    with self.subTest(t=t, q=q, s=s):
                        e0, e1 = equation_pair_from_f_form(t, q, s)
                        _assert_valid(self, witness_thm21(t, q, s), e0, e1)

    def test_thm22_grid(self):
        for t in range(1, 4):
            for s in range(t, 9):
                for q in range(s, 9):
                    with self.subTest(t=t, q=q, s=s):
                        e0, e1 = equation_pair_from_f_form(t, q, s)
                        coloring = witness_thm22(t, q, s)
                        self.assertEqual(coloring.N, closed_forms.lower_bound_thm22(t, q, s) - 1)
                        _assert_valid(self, coloring, e0, e1)

    def test_gamma_grid(self):
        for q in range(1, 13):
            with self.subTest(q=q):
                e0, e1 = equation_pair_from_f_form(1, q, 1)
                coloring = witness_gamma_s1(q)
                self.assertEqual(coloring.N, closed_forms.exact_rr1(q, 1) - 1)
                _assert_valid(self, coloring, e0, e1)

    def test_gamma_multivariable(self):
        e0 = multivar_equation((1, 2))
        e1 = multivar_equation((1,))
        _assert_valid(self, witness_gamma_s1(3), e0, e1)

    def test_anomalous(self):
        for t in (3, 4, 5):
            with self.subTest(t=t):
                e0, e1 = equation_pair_from_f_form(t, 2 * t + 1, t)
                _assert_valid(self, witness_anomalous(t), e0, e1)

    def test_remark_t6(self):
        e0, e1 = equation_pair_from_f_form(6, 13, 6)
        _assert_valid(self, witness_remark_t6(), e0, e1)


class TestBestWitness(unittest.TestCase):
    """Tests pour le choix du meilleur témoin."""

    def test_choices(self):
        name, coloring = best_witness(*equation_pair_from_f_form(6, 13, 6))
        self.assertEqual(name, "remark-t6")
        self.assertEqual(coloring.N, 1392)

        name, coloring = best_witness(*equation_pair_from_f_form(3, 7, 3))
        self.assertEqual(name, "anomalous")
        self.assertEqual(coloring.N, 191)

        name, coloring = best_witness(parse_equation("1,3,-1"), parse_equation("1,1,-1"))
        self.assertEqual(name, "gamma")
        self.assertEqual(coloring.N, 10)

        name, coloring = best_witness(multivar_equation((1, 2)), multivar_equation((1,)))
        self.assertEqual(name, "gamma")
        self.assertEqual(coloring.N, 10)

    def test_swapped_orientation(self):
        e0, e1 = equation_pair_from_f_form(2, 4, 3)
        name, direct = best_witness(e0, e1)
        swapped_name, swapped = best_witness(e1, e0)
        self.assertEqual(name, swapped_name)
        self.assertEqual(swapped, direct.flipped())
        _assert_valid(self, swapped, e1, e0)

    def test_no_construction(self):
        self.assertEqual(best_witness(parse_equation("1,2,-1"), parse_equation("2,3,-1")), (None, None))
        self.assertEqual(best_witness(parse_equation("1,1,-2"), parse_equation("1,1,-1")), (None, None))

    def test_returns_coloring(self):
        _, coloring = best_witness(*equation_pair_from_f_form(1, 2, 2))
        self.assertIsInstance(coloring, Coloring)
        self.assertEqual(coloring.N, closed_forms.exact_rr1(2, 2) - 1)


if __name__ == '__main__':
    unittest.main()
