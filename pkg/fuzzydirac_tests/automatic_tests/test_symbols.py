# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

import numpy as np

from fuzzydirac.core.bridge.symbols import (symbol_contravariant, symbol_embedding, berezin_eigenvalue, berezin_map,
                                            symbol_sample_matrix)
from fuzzydirac.core.lie_algebra import SuperopKind
from fuzzydirac.core.sphere_model import symbol_covariant, quadrature_grid
from fuzzydirac.utils.exceptions import DegreeOverflow
from fuzzydirac.utils.numlin import identity, random_hermitian


class TestSymbols(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(13)

    def test_closed_form_eigenvalues(self):
        self.assertAlmostEqual(berezin_eigenvalue(1, 1), 1.0 / 3.0, places=14)
        self.assertAlmostEqual(berezin_eigenvalue(4, 0), 1.0, places=14)
        self.assertAlmostEqual(berezin_eigenvalue(2, 2), 2.0 * 6.0 / 120.0, places=14)

    def test_berezin_spectrum(self):
        for m in range(1, 5):
            berezin, spectrum = berezin_map(m)
            self.assertEqual(berezin.kind, SuperopKind.BEREZIN)
            self.assertEqual(len(spectrum.eigenvalues), m + 1)
            self.assertLess(spectrum.max_deviation, 1e-10)
            self.assertLess(spectrum.equivariance_residual, 1e-9)
            self.assertAlmostEqual(spectrum.eigenvalues[0], 1.0, places=10)
            self.assertAlmostEqual(spectrum.gap, 2.0 / (m + 2), places=10)
            self.assertAlmostEqual(spectrum.lambda_min, berezin_eigenvalue(m, m), places=10)

    def test_berezin_needs_positive_level(self):
        with self.assertRaises(ValueError):
            berezin_map(0)

    def test_contravariant_symbol_of_cosine(self):
        cosine = symbol_covariant(np.diag([1.0, -1.0]))
        self.assertLess(np.max(np.abs(symbol_contravariant(cosine, 1) - np.diag([1.0, -1.0]) / 3.0)), 1e-12)

    def test_contravariant_symbol_is_unital(self):
        for m in (1, 3):
            constant = symbol_covariant(identity(3))
            self.assertLess(np.max(np.abs(symbol_contravariant(constant, m) - identity(m + 1))), 1e-12)

    def test_contravariant_symbol_rejects_small_grid(self):
        cosine = symbol_covariant(np.diag([1.0, -1.0]))
        with self.assertRaises(DegreeOverflow):
            symbol_contravariant(cosine, 1, quadrature_grid(1))

    def test_embedding_preserves_symbols(self):
        b = random_hermitian(3, self.rng)
        embedding = symbol_embedding(2, 4)
        c = (embedding @ b.reshape(-1)).reshape(5, 5)
        grid = quadrature_grid(6)
        self.assertTrue(np.allclose(symbol_covariant(c).values(grid.thetas, grid.phis),
                                    symbol_covariant(b).values(grid.thetas, grid.phis), atol=1e-10))

    def test_sample_matrix(self):
        grid = quadrature_grid(2)
        b = random_hermitian(2, self.rng)
        samples = symbol_sample_matrix(1, grid)
        self.assertEqual(samples.shape, (grid.size, 4))
        self.assertTrue(np.allclose(samples @ b.reshape(-1), symbol_covariant(b).values(grid.thetas, grid.phis)))
