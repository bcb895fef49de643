# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import numpy as np
import pandas as pd

from fuzzydirac.core.fuzzy_dirac import lip_seminorm, lip_seminorm_clifford, ld_seminorm, lell_estimate
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags
from fuzzydirac.utils.constants import TOL_EQUIVARIANCE

COLUMNS = ["sample", "lip_minus", "lip_plus", "lip_clifford", "l_d", "l_ell"]


class SeminormSuite(SuiteBase):
    """
    L^D for both spinor signs, the Clifford norm cross-check, L_d and L_l on random self-adjoint inputs (or the
    matrix given with --matrix), together with the inequalities between them.
    """

    name = "seminorm"

    def run(self) -> SuiteResult:
        n = self.global_settings[Tags.LEVEL]
        rng = np.random.default_rng(self.seed)
        count = 1 if Tags.MATRIX_PATH in self.global_settings else self.global_settings[Tags.SAMPLES]
        rows = []
        for index in range(count):
            a = self.input_matrix(n, rng)
            rows.append({"sample": index, "lip_minus": lip_seminorm(n, a, -1), "lip_plus": lip_seminorm(n, a, 1),
                         "lip_clifford": lip_seminorm_clifford(n, a), "l_d": ld_seminorm(n, a),
                         "l_ell": lell_estimate(n, a, seed=self.seed + index)})
        table = pd.DataFrame(rows, columns=COLUMNS)
        scale = np.maximum(table["lip_minus"].to_numpy(), 1.0)
        spread = table[["lip_minus", "lip_plus", "lip_clifford"]].to_numpy()
        lip = table["lip_minus"].to_numpy()
        checks = [
            ("spinor_independence", float(np.max((spread.max(axis=1) - spread.min(axis=1)) / scale)),
             TOL_EQUIVARIANCE),
            ("l_d_below_lip", float(np.max(table["l_d"].to_numpy() - lip * (1 + 1e-4))), 0.0),
            ("lip_below_three_l_d", float(np.max(lip - 3 * table["l_d"].to_numpy() * (1 + 1e-3))), 0.0),
            ("l_ell_below_lip", float(np.max(table["l_ell"].to_numpy() - lip * (1 + 1e-6))), 0.0),
        ]
        return SuiteResult(self.name, table, checks)
