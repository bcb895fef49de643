# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os

import matplotlib.pyplot as plt

from fuzzydirac.core.bridge import tunnel_maps
from fuzzydirac_tests.manual_tests import ManualIntegrationTestClass


class TunnelUpToLevelSix(ManualIntegrationTestClass):

    def setup(self):
        self.levels = list(range(1, 7))
        self.diagnostics = []

    def perform_test(self):
        for m in self.levels:
            _, diagnostics = tunnel_maps(m)
            assert diagnostics.intertwining_a < 1e-8 and diagnostics.intertwining_b < 1e-8, diagnostics
            assert diagnostics.adjointness < 1e-8, diagnostics
            assert abs(diagnostics.norm_a - 1.0) < 1e-8 and abs(diagnostics.norm_b - 1.0) < 1e-8, diagnostics
            self.diagnostics.append(diagnostics)
        low_band = [diagnostics.low_band_defect for diagnostics in self.diagnostics[1:]]
        assert all(later < earlier for earlier, later in zip(low_band[:-1], low_band[1:])), low_band

    def visualise_result(self, show_figure_on_screen=True, save_path=None):
        plt.figure(figsize=(7, 5))
        plt.semilogy(self.levels, [d.low_band_defect for d in self.diagnostics], "o-", label="low band defect")
        plt.semilogy(self.levels, [d.tunnel_epsilon for d in self.diagnostics], "s-", label="tunnel epsilon")
        plt.xlabel("level m")
        plt.legend()
        plt.tight_layout()
        if show_figure_on_screen:
            plt.show()
        else:
            plt.savefig(os.path.join(save_path, "tunnel_up_to_level_six.png"))
        plt.close()


if __name__ == '__main__':
    test = TunnelUpToLevelSix()
    test.run_test(show_figure_on_screen=False)
