# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import numpy as np
import pandas as pd

from fuzzydirac.core.bridge.bridge import bridge_report, make_bridge
from fuzzydirac.core.bridge.symbols import berezin_map, symbol_contravariant
from fuzzydirac.core.sphere_model import symbol_covariant
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags
from fuzzydirac.utils.constants import TOL_EQUIVARIANCE
from fuzzydirac.utils.numlin import identity, op_norm

COLUMNS = ["m", "lambda_min", "gap", "gamma_A", "gamma_B", "delta_hat", "delta_hat_spread", "height_surrogate",
           "a_side_height", "length_bound", "covariant_margin", "contravariant_margin", "berezin_equivariance_residual",
           "runtime_ms"]


def report_row(report) -> dict:
    row = report.as_row()
    row["gamma_A"] = row.pop("gamma_a")
    row["gamma_B"] = row.pop("gamma_b")
    return row


class BridgeSuite(SuiteBase):
    """
    The bridge report at level m with the checks on the pivot, the symbols and the Berezin transform.
    """

    name = "bridge"

    def run(self) -> SuiteResult:
        m = self.global_settings[Tags.BRIDGE_LEVEL]
        tolerance = float(self.global_settings[Tags.TOLERANCE_IDENTITIES])
        work_level = m + self.global_settings[Tags.WORK_LEVEL_OFFSET]
        report = bridge_report(m, self.global_settings[Tags.BUDGET], self.seed, work_level,
                               self.global_settings[Tags.RECORD_RUNTIME])
        _, berezin = berezin_map(m)
        projection, unital = make_bridge(m, work_level).check_pivot()
        constant = symbol_covariant(identity(m + 1))
        checks = [
            ("berezin_fixes_constants", abs(berezin.eigenvalues[0] - 1.0), tolerance),
            ("berezin_closed_form", berezin.max_deviation, tolerance),
            ("berezin_equivariance", berezin.equivariance_residual, TOL_EQUIVARIANCE),
            ("pivot_projection", projection, tolerance),
            ("pivot_unital", unital, tolerance),
            ("contravariant_unital", op_norm(symbol_contravariant(constant, m) - identity(m + 1)), tolerance),
            ("covariant_contraction", -report.covariant_margin, 1e-6),
            ("contravariant_contraction", -report.contravariant_margin, 1e-6),
        ]
        table = pd.DataFrame([report_row(report)], columns=COLUMNS)
        return SuiteResult(self.name, table, checks)
