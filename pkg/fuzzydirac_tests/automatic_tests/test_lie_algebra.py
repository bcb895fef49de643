# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

import numpy as np

from fuzzydirac.core.lie_algebra import (E1, E2, E3, su2_basis, irrep, casimir_image, derivation, conjugation,
                                         GroupElement, isotypic_decomposition, isotypic_projectors, zonal_element,
                                         length_function, lie_bracket_coefficients, SuperopKind, Superop)
from fuzzydirac.utils.exceptions import NotGroupElement, NotSU2, DimensionMismatch
from fuzzydirac.utils.numlin import identity, op_norm, is_skew_hermitian, is_hermitian, random_hermitian


class TestLieAlgebra(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(3)

    def test_basis_structure(self):
        self.assertLess(su2_basis().structure_residual(), 1e-14)
        self.assertLess(np.max(np.abs(E1 @ E2 - E3)), 1e-15)
        self.assertTrue(np.allclose(lie_bracket_coefficients(0, 1), [0.0, 0.0, 2.0]))

    def test_basis_matrices_are_read_only(self):
        with self.assertRaises(ValueError):
            E1[0, 0] = 1.0

    def test_level_one_irrep_is_the_defining_representation(self):
        for u, e in zip(irrep(1).generators, (E1, E2, E3)):
            self.assertLess(np.max(np.abs(u - e)), 1e-15)

    def test_irrep_commutation_and_casimir(self):
        for n in range(6):
            rep = irrep(n)
            self.assertEqual(rep.dim, n + 1)
            self.assertLess(rep.commutation_residual(), 1e-12)
            self.assertLess(op_norm(casimir_image(rep) + n * (n + 2) * identity(n + 1)), 1e-11)
            for u in rep.generators:
                self.assertTrue(is_skew_hermitian(u))

    def test_irrep_ladder(self):
        rep = irrep(2)
        self.assertAlmostEqual(rep.ladder_e[0, 1].real, np.sqrt(2.0), places=14)
        self.assertAlmostEqual(rep.ladder_e[1, 2].real, np.sqrt(2.0), places=14)
        self.assertTrue(np.allclose(np.diag(rep.ladder_h).real, [2, 0, -2]))
        self.assertEqual(rep.highest_projector[0, 0], 1.0)
        self.assertEqual(np.sum(np.abs(rep.highest_projector)), 1.0)

    def test_irrep_rejects_negative_weight(self):
        with self.assertRaises(ValueError):
            irrep(-1)

    def test_derivation_is_commutator(self):
        rep = irrep(3)
        t = random_hermitian(4, self.rng)
        alpha = derivation(rep, [0.2, -0.5, 1.0])
        u = rep.lie_element([0.2, -0.5, 1.0])
        self.assertEqual(alpha.kind, SuperopKind.DERIVATION)
        self.assertLess(np.max(np.abs(alpha.apply(t) - (u @ t - t @ u))), 1e-12)
        self.assertLess(np.max(np.abs(alpha.apply(identity(4)))), 1e-12)

    def test_conjugation(self):
        rep = irrep(2)
        g = GroupElement.random(self.rng)
        u = g.lift(rep)
        t = random_hermitian(3, self.rng)
        alpha = conjugation(rep, g)
        self.assertLess(np.max(np.abs(alpha.apply(t) - u @ t @ np.conj(u).T)), 1e-12)
        round_trip = alpha.compose(conjugation(rep, g.inverse()))
        self.assertLess(np.max(np.abs(round_trip.apply(t) - t)), 1e-12)

    def test_conjugation_rejects_non_unitary(self):
        with self.assertRaises(NotGroupElement):
            conjugation(irrep(1), 2 * identity(2))

    def test_superop_checks_its_size(self):
        with self.assertRaises(DimensionMismatch):
            Superop(2, identity(4), SuperopKind.PROJECTOR)

    def test_isotypic_decomposition(self):
        self.assertEqual([sector.dim for sector in isotypic_decomposition(1)], [1, 3])
        self.assertEqual([sector.dim for sector in isotypic_decomposition(2)], [1, 3, 5])
        total = sum(projector.matrix for _, projector in isotypic_projectors(3))
        self.assertLess(np.max(np.abs(total - identity(16))), 1e-10)

    def test_isotypic_projectors_commute_with_conjugation(self):
        for n in (2, 3):
            rep = irrep(n)
            for _ in range(2):
                alpha = conjugation(rep, GroupElement.random(self.rng)).matrix
                for _, projector in isotypic_projectors(n):
                    residual = projector.matrix @ alpha - alpha @ projector.matrix
                    self.assertLess(np.max(np.abs(residual)), 1e-10)

    def test_zonal_element(self):
        element = zonal_element(3, 2)
        self.assertTrue(is_hermitian(element))
        self.assertAlmostEqual(op_norm(element), 1.0, places=12)
        self.assertLess(np.max(np.abs(element - np.diag(np.diag(element)))), 1e-10)

    def test_length_function(self):
        self.assertAlmostEqual(length_function(identity(2)), 0.0, places=12)
        self.assertAlmostEqual(length_function(-identity(2)), np.pi, places=12)
        self.assertAlmostEqual(length_function(GroupElement((1.0, 0.0, 0.0), 0.3).matrix), 0.3, places=10)

    def test_length_function_rejects_det_minus_one(self):
        with self.assertRaises(NotSU2):
            length_function(np.diag([1.0, -1.0]))
