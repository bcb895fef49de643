# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import numpy as np
import pandas as pd

from fuzzydirac.core.bridge.linking import linking_demo
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags
from fuzzydirac.utils.exceptions import ConfigError
from fuzzydirac.utils.numlin import op_norm

PAIRS = 50


class LinkingSuite(SuiteBase):
    """
    The commutator norm identity of the linking Dirac operator on the M_4 instance.
    """

    name = "linking"

    def run(self) -> SuiteResult:
        if not self.global_settings[Tags.DEMO]:
            msg = "The linking suite runs the built-in M_4 instance only, pass --demo"
            self.logger.critical(msg)
            raise ConfigError(msg)
        operator = linking_demo(self.seed, float(self.global_settings[Tags.LINKING_RADIUS]))
        rng = np.random.default_rng([self.seed, 1])
        rows = []
        for index in range(PAIRS):
            a, b = operator.random_pair(rng)
            rows.append({"pair": index, "commutator_norm": operator.commutator_norm(a, b),
                         "formula_norm": operator.formula_norm(a, b),
                         "lip_a": op_norm(operator.dirac_a @ a - a @ operator.dirac_a),
                         "bridge_seminorm": operator.bridge_seminorm(a, b),
                         "star_bridge_seminorm": operator.star_bridge_seminorm(a, b),
                         "lip_b": op_norm(operator.dirac_b @ b - b @ operator.dirac_b)})
        table = pd.DataFrame(rows)
        exact = table["commutator_norm"].to_numpy()
        residual = float(np.max(np.abs(exact - table["formula_norm"].to_numpy()) / np.maximum(exact, 1.0)))
        checks = [("commutator_norm_identity", residual, float(self.global_settings[Tags.TOLERANCE_IDENTITIES]))]
        return SuiteResult(self.name, table, checks)
