# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

from fuzzydirac.core.identities import (identity_suite, check_casimir_identity, check_square, check_equivariance,
                                        check_first_order, check_leibniz, check_spinor_independence, IdentityCheck)

CHECK_NAMES = ["su2_structure", "irrep_commutation", "casimir_scalar", "clifford_anticommutation",
               "charge_conjugation_3d", "dirac_self_adjoint", "spinor_casimir", "casimir_decomposition",
               "casimir_identity", "square", "equivariance", "seminorm_invariance", "zeroth_order", "first_order",
               "charge_commutation", "leibniz", "spinor_independence"]


class TestIdentities(unittest.TestCase):

    def test_casimir_identity(self):
        report = check_casimir_identity(2)
        self.assertLess(report.residual, 1e-10)
        self.assertLess(report.decomposition_residual, 1e-10)
        self.assertLess(report.spinor_casimir_residual, 1e-14)
        self.assertEqual(report.sign_map, {-1: 1, 1: -1})

    def test_square(self):
        for sign in (-1, 1):
            report = check_square(3, sign)
            self.assertLess(report.residual, 1e-9)
            self.assertGreater(report.curvature_norm, 0.0)

    def test_equivariance(self):
        report = check_equivariance(2, trials=4, seed=1)
        self.assertLess(report.residual, 1e-9)
        self.assertLess(report.invariance_residual, 1e-9)

    def test_first_order(self):
        report = check_first_order(2)
        self.assertLess(report.zeroth_order, 1e-9)
        self.assertLess(report.first_order, 1e-9)
        self.assertLess(report.commutation_residual, 1e-9)
        self.assertIn(report.commutation_sign, (-1, 1))

    def test_leibniz_and_spinor_independence(self):
        self.assertLess(check_leibniz(3, samples=3), 1e-9)
        self.assertLess(check_spinor_independence(3, samples=3), 1e-9)

    def test_identity_suite(self):
        for n in (1, 2):
            checks = identity_suite(n, seed=0, samples=3)
            self.assertEqual([check.name for check in checks], CHECK_NAMES)
            failed = [check.name for check in checks if not check.passed]
            self.assertEqual(failed, [])

    def test_identity_check_passes_on_tolerance(self):
        self.assertTrue(IdentityCheck("check", 1e-11, 1e-10).passed)
        self.assertTrue(IdentityCheck("check", 1e-10, 1e-10).passed)
        self.assertFalse(IdentityCheck("check", 2e-10, 1e-10).passed)
