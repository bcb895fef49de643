# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import numpy as np
import pandas as pd

from fuzzydirac.core.fuzzy_dirac import lip_seminorm
from fuzzydirac.core.sphere_model import symbol_covariant, grad_norms, cont_seminorm
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags


class SymbolSuite(SuiteBase):
    """
    Samples the covariant symbol of a self-adjoint matrix and its gradient norm on a polar grid.
    """

    name = "symbol"

    def run(self) -> SuiteResult:
        n = self.global_settings[Tags.LEVEL]
        resolution = self.global_settings[Tags.GRID_RESOLUTION]
        b = self.input_matrix(n, np.random.default_rng(self.seed))
        f = symbol_covariant(b)
        theta_axis = np.linspace(0.0, np.pi, resolution)
        phi_axis = 2 * np.pi * np.arange(2 * resolution) / (2 * resolution)
        thetas, phis = [axis.reshape(-1) for axis in np.meshgrid(theta_axis, phi_axis, indexing="ij")]
        gradients = grad_norms(f, thetas, phis)
        table = pd.DataFrame({"theta": thetas, "phi": phis, "f": np.real(f.values(thetas, phis)),
                              "grad_norm": gradients})
        continuous = cont_seminorm(f)
        lip = lip_seminorm(n, b)
        checks = [("cont_below_lip", continuous - lip * (1 + 1e-6), 0.0),
                  ("grid_max_grad_norm", float(np.max(gradients)), None)]
        return SuiteResult(self.name, table, checks, extras={"cont_seminorm": continuous, "lip_seminorm": lip})
