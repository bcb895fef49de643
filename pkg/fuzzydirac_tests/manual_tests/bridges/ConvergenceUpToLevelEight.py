# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os

import matplotlib.pyplot as plt

from fuzzydirac.core.bridge import convergence_study
from fuzzydirac_tests.manual_tests import ManualIntegrationTestClass


class ConvergenceUpToLevelEight(ManualIntegrationTestClass):
    """
    The bridge diagnostics for m = 1, ..., 8. The Berezin gap must equal 2 / (m + 2) at every level. The reach
    and height estimates are lower bounds of suprema, so their trends are only logged and plotted.
    """

    def setup(self):
        self.m_max = 8
        self.study = None

    def perform_test(self):
        self.study = convergence_study(self.m_max, budget=1, seed=0, threads=4, record_runtime=True)
        for report in self.study.reports:
            assert abs(report.gap - 2.0 / (report.m + 2)) < 1e-9, report
            assert report.length_bound >= report.delta_hat
            assert report.covariant_margin >= -1e-9
            assert report.contravariant_margin >= -1e-9
        assert self.study.gap_strictly_decreasing
        if not self.study.height_within_spread:
            self.logger.warning("The height estimates rise beyond the restart spread up to m = 8")
        elif not self.study.height_decreasing:
            self.logger.warning("The height estimates are monotone up to m = 8 only within the restart spread")
        if not self.study.reach_nonincreasing:
            self.logger.warning("The reach estimates are not monotone up to m = 8")

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        levels = [report.m for report in self.study.reports]
        plt.figure(figsize=(7, 5))
        plt.plot(levels, [report.gap for report in self.study.reports], "o-", label="Berezin gap")
        plt.plot(levels, [report.gamma_a for report in self.study.reports], "s-", label="reach, sphere side")
        plt.plot(levels, [report.gamma_b for report in self.study.reports], "^-", label="reach, matrix side")
        plt.plot(levels, [report.delta_hat for report in self.study.reports], "d-", label="height")
        plt.xlabel("level m")
        plt.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "convergence_up_to_level_eight.png"))
        plt.close()


if __name__ == '__main__':
    test = ConvergenceUpToLevelEight()
    test.run_test(show_figure_on_screen=False)
