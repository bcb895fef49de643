# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os
from argparse import ArgumentParser

import matplotlib.pyplot as plt
import numpy as np

import fuzzydirac as fd
from fuzzydirac.utils.profiling import profile


@profile
def run_spectrum_study(max_level: int = 6, sign: int = -1, path_manager=None, visualise: bool = True):
    """
    Diagonalises the fuzzy Dirac operator for n = 1, ..., max_level, stores the spectra in an hdf5 file and plots
    the clusters against the closed form 2k with multiplicity 2k.

    :param max_level: the largest level n
    :param sign: the spinor sign
    :param path_manager: the path manager to be used, typically fd.PathManager
    :param visualise: whether to plot the spectra
    """
    if path_manager is None:
        path_manager = fd.PathManager()

    spectra = {}
    for n in range(1, max_level + 1):
        report = fd.spectrum(fd.build_dirac(n, sign))
        spectra[str(n)] = {"shifted_eigenvalues": report.shifted_eigenvalues,
                           "max_deviation": report.max_deviation}
        print(f"n = {n}: {len(report.clusters)} clusters, max deviation {report.max_deviation:.2e}")

    fd.save_hdf5(spectra, os.path.join(path_manager.get_output_directory(), "spectrum_study.hdf5"))

    if visualise:
        for n, entry in spectra.items():
            values, counts = np.unique(np.round(entry["shifted_eigenvalues"], 6), return_counts=True)
            plt.scatter(np.full(len(values), int(n)), values, s=4 * counts)
        plt.xlabel("level n")
        plt.ylabel("eigenvalue of the shifted operator")
        plt.title(f"Spinor sign {sign:+d}")
        plt.show()


if __name__ == "__main__":
    parser = ArgumentParser(description='Run the spectrum study of the fuzzy Dirac operator')
    parser.add_argument("--max_level", default=6, type=int, help='the largest level n')
    parser.add_argument("--sign", default=-1, type=int, choices=[-1, 1], help='the spinor sign')
    parser.add_argument("--path_manager", default=None, help='the path manager, None uses fd.PathManager')
    parser.add_argument("--visualise", default=True, type=bool, help='whether to visualise the result')
    config = parser.parse_args()

    run_spectrum_study(max_level=config.max_level, sign=config.sign, path_manager=config.path_manager,
                       visualise=config.visualise)
