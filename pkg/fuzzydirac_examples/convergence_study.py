# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

import os
from argparse import ArgumentParser

import matplotlib.pyplot as plt
import pandas as pd

import fuzzydirac as fd
from fuzzydirac.utils.profiling import profile


@profile
def run_convergence_study(m_max: int = 4, budget: int = 1, threads: int = 1, path_manager=None,
                          visualise: bool = True):
    """
    Runs the bridge diagnostics between the sphere and the matrix algebras for m = 1, ..., m_max and writes them
    into a csv table.

    :param m_max: the largest matrix level
    :param budget: every unit buys three restarts of each search
    :param threads: the number of levels evaluated in parallel
    :param path_manager: the path manager to be used, typically fd.PathManager
    :param visualise: whether to plot the diagnostics
    """
    if path_manager is None:
        path_manager = fd.PathManager()

    study = fd.convergence_study(m_max, budget=budget, threads=threads, record_runtime=True)
    table = pd.DataFrame([report.as_row() for report in study.reports])
    table.to_csv(os.path.join(path_manager.get_output_directory(), "convergence_study.csv"), index=False)
    columns = ["m", "gap", "gamma_a", "gamma_b", "delta_hat", "delta_hat_spread", "runtime_ms"]
    print(table[columns].to_string(index=False))

    if visualise:
        table.plot(x="m", y=["gap", "gamma_a", "gamma_b", "delta_hat"], marker="o")
        plt.xlabel("level m")
        plt.show()


if __name__ == "__main__":
    parser = ArgumentParser(description='Run the convergence study of the sphere bridges')
    parser.add_argument("--m_max", default=4, type=int, help='the largest matrix level')
    parser.add_argument("--budget", default=1, type=int, help='the search budget')
    parser.add_argument("--threads", default=1, type=int, help='the number of worker threads')
    parser.add_argument("--path_manager", default=None, help='the path manager, None uses fd.PathManager')
    parser.add_argument("--visualise", default=True, type=bool, help='whether to visualise the result')
    config = parser.parse_args()

    run_convergence_study(m_max=config.m_max, budget=config.budget, threads=config.threads,
                          path_manager=config.path_manager, visualise=config.visualise)
