# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

import numpy as np

from fuzzydirac.core.fuzzy_dirac import (build_dirac, predicted_spectrum, spectrum, lip_seminorm,
                                         lip_seminorm_clifford, ld_seminorm, lell_estimate, fibonacci_directions)
from fuzzydirac.core.lie_algebra import E3
from fuzzydirac.utils.exceptions import DimensionMismatch
from fuzzydirac.utils.numlin import is_hermitian, random_hermitian, identity


class TestFuzzyDirac(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(5)

    def test_dimension_and_hermiticity(self):
        for n in (1, 2, 3):
            dirac = build_dirac(n)
            self.assertEqual(dirac.dim, 2 * (n + 1) ** 2)
            self.assertEqual(dirac.matrix.shape, (dirac.dim, dirac.dim))
            self.assertTrue(is_hermitian(dirac.matrix))

    def test_level_zero_is_rejected(self):
        with self.assertRaises(ValueError):
            build_dirac(0)

    def test_level_one_spectrum(self):
        # alpha_X = [U_X, .] puts {-4 (x2), 0 (x2), 2 (x4)} at sign +1
        eigenvalues = np.linalg.eigvalsh(build_dirac(1, -1).matrix)
        self.assertTrue(np.allclose(eigenvalues, [-2, -2, -2, -2, 0, 0, 4, 4], atol=1e-10))
        eigenvalues = np.linalg.eigvalsh(build_dirac(1, 1).matrix)
        self.assertTrue(np.allclose(eigenvalues, [-4, -4, 0, 0, 2, 2, 2, 2], atol=1e-10))
        for sign in (-1, 1):
            self.assertEqual(build_dirac(1, sign).orientation, sign)
            report = spectrum(build_dirac(1, sign))
            self.assertTrue(np.allclose(report.shifted_eigenvalues, [-2, -2, 2, 2, 4, 4, 4, 4], atol=1e-10))

    def test_predicted_spectrum(self):
        clusters = predicted_spectrum(2)
        self.assertEqual(len(clusters), 5)
        self.assertEqual(sum(multiplicity for _, multiplicity in clusters), 18)
        self.assertEqual(clusters[-1], (6.0, 6))

    def test_spectrum_matches_closed_form(self):
        for n in range(1, 5):
            for sign in (-1, 1):
                report = spectrum(build_dirac(n, sign))
                self.assertEqual(report.multiplicity_sum, 2 * (n + 1) ** 2)
                self.assertLess(report.max_deviation, 1e-9)
                self.assertEqual(len(report.clusters), 2 * n + 1)

    def test_spectrum_is_not_symmetric(self):
        for n in (1, 2, 3):
            for sign in (-1, 1):
                report = spectrum(build_dirac(n, sign))
                self.assertFalse(report.is_symmetric)
                # s D has 2j with multiplicity 2j + 2 for j <= n and -2j with multiplicity 2j - 2
                expected = tuple((2.0 * j, 2 * j + 2 if j <= n else 0, 2 * j - 2) for j in range(1, n + 2))
                self.assertEqual(report.asymmetry, expected)
                top = report.clusters[-1]
                self.assertEqual(top.multiplicity, 2 * (n + 1))
                self.assertEqual(top.mirror_multiplicity, 2 * n - 2)

    def test_shared_clusters_agree_across_levels(self):
        multiplicities = {}
        for level in range(1, 11):
            report = spectrum(build_dirac(level))
            multiplicities[level] = {cluster.predicted: cluster.multiplicity for cluster in report.clusters}
        for m in range(1, 10):
            for m_prime in range(m + 1, 11):
                for k in range(1, m + 1):
                    for value in (-2.0 * k, 2.0 * k):
                        self.assertEqual(multiplicities[m][value], multiplicities[m_prime][value])

    def test_seminorms_of_e3(self):
        self.assertAlmostEqual(lip_seminorm(1, E3), 4.0, places=10)
        self.assertAlmostEqual(lip_seminorm(1, E3, 1), 4.0, places=10)
        self.assertAlmostEqual(lip_seminorm_clifford(1, E3), 4.0, places=10)
        self.assertAlmostEqual(ld_seminorm(1, E3), 2.0, places=8)
        estimate = lell_estimate(1, E3)
        self.assertGreater(estimate, 1.0)
        self.assertLessEqual(estimate, 2.0 + 1e-6)

    def test_seminorm_inequalities(self):
        for _ in range(3):
            a = random_hermitian(4, self.rng)
            lip = lip_seminorm(3, a)
            ld = ld_seminorm(3, a)
            self.assertAlmostEqual(lip, lip_seminorm_clifford(3, a), places=9)
            self.assertLessEqual(ld, lip * (1 + 1e-6))
            self.assertLessEqual(lip, 3 * ld * (1 + 1e-6))
            self.assertLessEqual(lell_estimate(3, a, samples=8), lip * (1 + 1e-6))

    def test_seminorms_vanish_on_scalars(self):
        self.assertLess(lip_seminorm(2, identity(3)), 1e-12)
        self.assertEqual(ld_seminorm(2, identity(3)), 0.0)

    def test_wrong_size_is_rejected(self):
        with self.assertRaises(DimensionMismatch):
            lip_seminorm(2, identity(2))

    def test_fibonacci_directions(self):
        directions = fibonacci_directions(100)
        self.assertEqual(directions.shape, (100, 3))
        self.assertTrue(np.allclose(np.linalg.norm(directions, axis=1), 1.0))

    def test_charge_conjugation_is_antiunitary_involution_up_to_sign(self):
        conjugation = build_dirac(2).charge_conjugation()
        square = conjugation.compose(conjugation)
        self.assertLess(np.max(np.abs(square + identity(square.shape[0]))), 1e-12)
