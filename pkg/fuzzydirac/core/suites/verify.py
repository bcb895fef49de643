# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import pandas as pd

from fuzzydirac.core.identities import identity_suite
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags
from fuzzydirac.utils.constants import TOL_EQUIVARIANCE


class VerifySuite(SuiteBase):
    """
    Every algebraic identity at level n with its residual and tolerance.
    """

    name = "verify"

    def run(self) -> SuiteResult:
        tolerance = float(self.global_settings[Tags.TOLERANCE_IDENTITIES])
        checks = identity_suite(self.global_settings[Tags.LEVEL], seed=self.seed,
                                samples=self.global_settings[Tags.SAMPLES], tol=tolerance,
                                tol_equivariance=max(tolerance, TOL_EQUIVARIANCE),
                                sign=self.global_settings[Tags.SPINOR_SIGN])
        table = pd.DataFrame([{"check": check.name, "residual": check.residual, "tolerance": check.tolerance,
                               "passed": check.passed} for check in checks],
                             columns=["check", "residual", "tolerance", "passed"])
        return SuiteResult(self.name, table, [(check.name, check.residual, check.tolerance) for check in checks])
