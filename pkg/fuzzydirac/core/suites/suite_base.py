# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

from abc import abstractmethod

import numpy as np

from fuzzydirac.core.suites.suite_result import SuiteResult
from fuzzydirac.io_handling.matrix_json import load_matrix
from fuzzydirac.log import Logger
from fuzzydirac.utils import Tags, RunConfig
from fuzzydirac.utils.exceptions import DimensionMismatch
from fuzzydirac.utils.numlin import random_hermitian


class SuiteBase:
    """
    Defines a suite of the command line interface that implements a run method. Each subcommand maps to one suite.
    """

    name = None

    def __init__(self, global_settings: RunConfig):
        """
        :param global_settings: The validated run configuration
        :type global_settings: RunConfig
        """
        self.logger = Logger()
        self.global_settings = global_settings
        self.seed = global_settings[Tags.RANDOM_SEED]

    def input_matrix(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """
        The matrix from --matrix if given, else a random self-adjoint element of B^n.

        :raises DimensionMismatch: if the file holds a matrix of the wrong size
        """
        if Tags.MATRIX_PATH not in self.global_settings:
            return random_hermitian(n + 1, rng)
        matrix = load_matrix(self.global_settings[Tags.MATRIX_PATH])
        if matrix.shape != (n + 1, n + 1):
            msg = f"The matrix in {self.global_settings[Tags.MATRIX_PATH]} is {matrix.shape[0]}x{matrix.shape[1]}, " \
                  f"level {n} needs {n + 1}x{n + 1}"
            self.logger.critical(msg)
            raise DimensionMismatch(msg)
        return matrix

    @abstractmethod
    def run(self) -> SuiteResult:
        """
        Executes the suite.

        :return: the result table and its checks
        """
        pass
