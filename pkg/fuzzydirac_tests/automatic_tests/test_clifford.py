# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

import numpy as np

from fuzzydirac.core.clifford import (clifford_gammas, chirality, clifford_norm, clifford_norm_bounds,
                                      charge_conj_3d, charge_conjugation_residual, clifford_conjugation,
                                      clifford_element, clifford_words, AntilinearMap)
from fuzzydirac.core.lie_algebra import E1, E2, E3
from fuzzydirac.utils.exceptions import DimensionMismatch
from fuzzydirac.utils.numlin import identity, op_norm, random_hermitian, is_hermitian


class TestClifford(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(11)

    def test_anticommutation(self):
        for m in range(1, 6):
            for sign in (-1, 1):
                rep = clifford_gammas(m, sign)
                self.assertEqual(rep.spinor_dim, 2 ** (m // 2))
                self.assertLess(rep.anticommutation_residual(), 1e-10)

    def test_three_dimensional_gauge(self):
        for sign in (-1, 1):
            rep = clifford_gammas(3, sign)
            for gamma, e in zip(rep.gammas, (E1, E2, E3)):
                self.assertLess(np.max(np.abs(gamma + sign * e)), 1e-10)

    def test_chirality(self):
        self.assertLess(np.max(np.abs(chirality(clifford_gammas(3, -1)) + identity(2))), 1e-10)
        self.assertLess(np.max(np.abs(chirality(clifford_gammas(3, 1)) - identity(2))), 1e-10)
        for m in (2, 4):
            gamma = chirality(clifford_gammas(m))
            self.assertTrue(is_hermitian(gamma))
            self.assertLess(np.max(np.abs(gamma @ gamma - identity(gamma.shape[0]))), 1e-10)
            for kappa in clifford_gammas(m).gammas:
                self.assertLess(np.max(np.abs(gamma @ kappa + kappa @ gamma)), 1e-10)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            clifford_gammas(0)
        with self.assertRaises(ValueError):
            clifford_gammas(3, 2)

    def test_clifford_norm(self):
        self.assertAlmostEqual(clifford_norm([-2 * E2, 2 * E1, np.zeros((2, 2))]), 4.0, places=12)
        a = random_hermitian(3, self.rng)
        zero = np.zeros((3, 3))
        self.assertAlmostEqual(clifford_norm([a, zero, zero]), op_norm(a), places=10)

    def test_clifford_norm_bounds_and_sign_independence(self):
        coefficients = [random_hermitian(4, self.rng) for _ in range(3)]
        lower, upper = clifford_norm_bounds(coefficients)
        value = clifford_norm(coefficients, -1)
        self.assertLessEqual(lower, value + 1e-12)
        self.assertLessEqual(value, upper + 1e-12)
        self.assertAlmostEqual(value, clifford_norm(coefficients, 1), places=10)

    def test_clifford_norm_rejects_mixed_shapes(self):
        with self.assertRaises(DimensionMismatch):
            clifford_norm([np.eye(2), np.eye(3)])

    def test_charge_conjugation(self):
        conjugation = charge_conj_3d()
        self.assertLess(np.max(np.abs(conjugation.compose(conjugation) + identity(2))), 1e-15)
        v = self.rng.standard_normal(2) + 1j * self.rng.standard_normal(2)
        self.assertLess(np.max(np.abs(conjugation.apply(conjugation.apply(v)) + v)), 1e-14)
        inverse = conjugation.inverse()
        self.assertLess(np.max(np.abs(inverse.apply(conjugation.apply(v)) - v)), 1e-14)
        for sign in (-1, 1):
            self.assertLess(charge_conjugation_residual(clifford_gammas(3, sign)), 1e-10)

    def test_clifford_conjugation_fixes_words(self):
        coefficients = {(): 1j, (0, 1): 2.0, (0, 1, 2): 1.0 - 1.0j}
        conjugated = clifford_conjugation(coefficients)
        self.assertEqual(conjugated, {(): -1j, (0, 1): 2.0, (0, 1, 2): 1.0 + 1.0j})
        rep = clifford_gammas(3)
        implemented = charge_conj_3d().conjugate(clifford_element(rep, coefficients))
        self.assertLess(np.max(np.abs(implemented - clifford_element(rep, conjugated))), 1e-10)

    def test_word_count(self):
        self.assertEqual(len(list(clifford_words(3))), 8)
        self.assertEqual(len(list(clifford_words(4))), 16)

    def test_antilinear_map(self):
        swap = AntilinearMap(np.array([[0, 1], [1, 0]], dtype=np.complex128))
        self.assertTrue(np.allclose(swap.apply(np.array([1j, 2])), [2, -1j]))
