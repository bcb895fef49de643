# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

import numpy as np

from fuzzydirac.core.lie_algebra import E2
from fuzzydirac.utils.exceptions import NotHermitian, NotSkewHermitian, DimensionMismatch
from fuzzydirac.utils.numlin import (as_matrix, herm_eig, op_norm, kron, expm_skew, random_hermitian,
                                     is_hermitian, is_skew_hermitian, is_unitary, identity,
                                     adjoint, commutator)


class TestNumlin(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(7)

    def test_as_matrix_rejects_vectors(self):
        with self.assertRaises(DimensionMismatch):
            as_matrix(np.ones(3))
        self.assertEqual(as_matrix([[1, 2], [3, 4]]).dtype, np.complex128)

    def test_predicates(self):
        a = random_hermitian(5, self.rng)
        self.assertTrue(is_hermitian(a))
        self.assertFalse(is_skew_hermitian(a))
        self.assertTrue(is_skew_hermitian(1j * a))
        self.assertFalse(is_hermitian(np.ones((2, 3))))
        self.assertTrue(is_unitary(expm_skew(1j * a)))

    def test_herm_eig_is_sorted_and_reconstructs(self):
        a = random_hermitian(6, self.rng)
        eigenvalues, eigenvectors = herm_eig(a)
        self.assertTrue(np.all(np.diff(eigenvalues) >= 0))
        reconstructed = (eigenvectors * eigenvalues[None, :]) @ adjoint(eigenvectors)
        self.assertLess(np.max(np.abs(reconstructed - a)), 1e-12)

    def test_herm_eig_rejects_non_hermitian(self):
        with self.assertRaises(NotHermitian):
            herm_eig(np.array([[0, 1], [0, 0]]))

    def test_op_norm(self):
        self.assertAlmostEqual(op_norm(np.diag([3.0, -5.0])), 5.0, places=12)
        self.assertEqual(op_norm(np.zeros((0, 0))), 0.0)
        norms = op_norm(np.stack([np.eye(2), 2 * np.eye(2)]))
        self.assertTrue(np.allclose(norms, [1.0, 2.0]))

    def test_kron_index_convention(self):
        a = np.arange(4).reshape(2, 2)
        b = np.arange(9).reshape(3, 3)
        product = kron(a, b)
        self.assertEqual(product[1 * 3 + 2, 0 * 3 + 1], a[1, 0] * b[2, 1])

    def test_expm_skew(self):
        self.assertLess(np.max(np.abs(expm_skew(E2, np.pi) + identity(2))), 1e-12)
        with self.assertRaises(NotSkewHermitian):
            expm_skew(np.eye(2))

    def test_expm_skew_group_law(self):
        x = 1j * random_hermitian(4, self.rng)
        for s, t in ((0.3, 1.1), (-0.7, 0.2), (2.5, -4.0)):
            product = expm_skew(x, s) @ expm_skew(x, t)
            self.assertLess(np.max(np.abs(product - expm_skew(x, s + t))), 1e-10)
            self.assertTrue(is_unitary(expm_skew(x, t)))
        self.assertLess(np.max(np.abs(expm_skew(x, 0.0) - identity(4))), 1e-12)

    def test_commutator(self):
        a = random_hermitian(3, self.rng)
        self.assertEqual(op_norm(commutator(a, a)), 0.0)
