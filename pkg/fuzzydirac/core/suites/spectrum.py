# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import pandas as pd

from fuzzydirac.core.fuzzy_dirac import build_dirac, spectrum
from fuzzydirac.core.suites.suite_base import SuiteBase
from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.utils import Tags

COLUMNS = ["eigenvalue", "multiplicity", "predicted", "deviation", "mirror_multiplicity"]


class SpectrumSuite(SuiteBase):
    """
    The eigenvalue clusters of the shifted Dirac operator against the closed form. The mirror multiplicity counts
    the eigenvalues of the unshifted operator at the negative of the cluster value; they differ from the
    multiplicity because the spectrum is not symmetric about zero.
    """

    name = "spectrum"

    def run(self) -> SuiteResult:
        n = self.global_settings[Tags.LEVEL]
        sign = self.global_settings[Tags.SPINOR_SIGN]
        tolerance = float(self.global_settings[Tags.TOLERANCE_EIGENVALUES])
        report = spectrum(build_dirac(n, sign), tolerance)
        table = pd.DataFrame([{"eigenvalue": cluster.eigenvalue, "multiplicity": cluster.multiplicity,
                               "predicted": cluster.predicted, "deviation": cluster.deviation,
                               "mirror_multiplicity": cluster.mirror_multiplicity}
                              for cluster in report.clusters],
                             columns=COLUMNS)
        checks = [("max_deviation", report.max_deviation, tolerance),
                  ("dimension", report.multiplicity_sum == 2 * (n + 1) ** 2, None),
                  ("asymmetric", not report.is_symmetric, None)]
        return SuiteResult(self.name, table, checks)
