# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import pandas as pd

from fuzzydirac.core.bridge.bridge import convergence_study
from fuzzydirac.core.suites.bridge import report_row
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags

COLUMNS = ["m", "lambda_min", "gap", "gamma_A", "gamma_B", "delta_hat", "delta_hat_spread", "runtime_ms"]


class ConvergeSuite(SuiteBase):
    """
    Bridge reports for m = 1, ..., m_max. Only the Berezin gap trend is asserted, the estimate trends are reported.
    """

    name = "converge"

    def run(self) -> SuiteResult:
        study = convergence_study(self.global_settings[Tags.MAX_BRIDGE_LEVEL], self.global_settings[Tags.BUDGET],
                                  self.seed, self.global_settings[Tags.THREADS],
                                  self.global_settings[Tags.WORK_LEVEL_OFFSET],
                                  self.global_settings[Tags.RECORD_RUNTIME])
        table = pd.DataFrame([report_row(report) for report in study.reports])[COLUMNS]
        checks = [("gap_strictly_decreasing", study.gap_strictly_decreasing, None)]
        extras = {"trends": {"gap_strictly_decreasing": study.gap_strictly_decreasing,
                             "height_decreasing": study.height_decreasing,
                             "height_within_spread": study.height_within_spread,
                             "reach_nonincreasing": study.reach_nonincreasing}}
        return SuiteResult(self.name, table, checks, extras)
