# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import unittest

import numpy as np

from fuzzydirac.core.bridge.tunnel import tunnel_maps, tunnel_norm, graph_norm
from fuzzydirac.utils.exceptions import BandTooSmall


class TestTunnel(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.maps, cls.diagnostics = tunnel_maps(1, model_level=3)

    def test_shapes(self):
        self.assertEqual(self.maps.theta_a.shape, (32, 8))
        self.assertEqual(self.maps.theta_b.shape, (8, 32))
        self.assertEqual(self.maps.dirac_model.shape, (32, 32))

    def test_maps_are_adjoint_contractions(self):
        self.assertLess(self.diagnostics.adjointness, 1e-8)
        self.assertAlmostEqual(self.diagnostics.norm_a, 1.0, places=8)
        self.assertAlmostEqual(self.diagnostics.norm_b, 1.0, places=8)

    def test_maps_intertwine_the_dirac_operators(self):
        self.assertLess(self.diagnostics.intertwining_a, 1e-8)
        self.assertLess(self.diagnostics.intertwining_b, 1e-8)
        self.assertLess(self.diagnostics.transport, 1e-8)

    def test_epsilon_and_low_band(self):
        self.assertTrue(np.isfinite(self.diagnostics.tunnel_epsilon))
        self.assertGreaterEqual(self.diagnostics.tunnel_epsilon, 0.0)
        self.assertGreaterEqual(self.diagnostics.low_band_defect, 0.0)
        self.assertLessEqual(self.diagnostics.low_band_defect, 1.0 + 1e-10)

    def test_low_band_defect_decreases(self):
        _, level_two = tunnel_maps(2)
        _, level_three = tunnel_maps(3)
        self.assertLess(level_three.low_band_defect, level_two.low_band_defect)

    def test_tunnel_norm_of_a_matched_pair(self):
        rng = np.random.default_rng(0)
        eta = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        xi = self.maps.theta_a @ eta
        expected = max(graph_norm(self.maps.dirac_model, xi, self.maps.gram_a),
                       graph_norm(self.maps.dirac_m, eta, self.maps.gram_b))
        self.assertAlmostEqual(tunnel_norm(self.maps, xi, eta, 0.1), expected, places=10)
        self.assertGreater(tunnel_norm(self.maps, xi + 1.0, eta, 1e-6), expected)

    def test_model_level_below_m(self):
        with self.assertRaises(BandTooSmall):
            tunnel_maps(2, model_level=1)
