# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os

import matplotlib.pyplot as plt
import numpy as np

from fuzzydirac.core.fuzzy_dirac import build_dirac, spectrum
from fuzzydirac.utils.constants import TOL_SPECTRUM
from fuzzydirac_tests.manual_tests import ManualIntegrationTestClass


class SpectrumUpToLevelTwelve(ManualIntegrationTestClass):
    """
    Diagonalises D for both spinor signs at every level up to 12 and matches the shifted spectra against the
    closed form. Level 12 acts on a space of dimension 338.
    """

    def setup(self):
        self.levels = list(range(1, 13))
        self.reports = {}

    def perform_test(self):
        for sign in (-1, 1):
            for n in self.levels:
                report = spectrum(build_dirac(n, sign))
                assert report.max_deviation <= TOL_SPECTRUM
                assert report.multiplicity_sum == 2 * (n + 1) ** 2
                assert not report.is_symmetric
                self.reports[(n, sign)] = report
                self.logger.info(f"n = {n}, sign = {sign}: max deviation {report.max_deviation:.2e}")

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        fig, (ax_spectrum, ax_deviation) = plt.subplots(1, 2, figsize=(12, 5))
        for n in self.levels:
            report = self.reports[(n, -1)]
            values, counts = np.unique(np.round(report.shifted_eigenvalues, 6), return_counts=True)
            ax_spectrum.scatter(np.full(len(values), n), values, s=4 * counts, color="tab:blue")
        ax_spectrum.set_xlabel("level n")
        ax_spectrum.set_ylabel("shifted eigenvalue (marker size ~ multiplicity)")
        for sign, color in ((-1, "tab:blue"), (1, "tab:orange")):
            deviations = [max(self.reports[(n, sign)].max_deviation, 1e-17) for n in self.levels]
            ax_deviation.semilogy(self.levels, deviations, "o-", color=color, label=f"sign {sign:+d}")
        ax_deviation.axhline(TOL_SPECTRUM, color="gray", linestyle="--", label="tolerance")
        ax_deviation.set_xlabel("level n")
        ax_deviation.set_ylabel("max deviation from the closed form")
        ax_deviation.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "spectrum_up_to_level_twelve.png"))
        plt.close()


if __name__ == '__main__':
    test = SpectrumUpToLevelTwelve()
    test.run_test(show_figure_on_screen=False)
