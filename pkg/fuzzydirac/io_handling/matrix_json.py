# SPDX-FileCopyrightText: 2024 Fuzzy Dirac developers
# SPDX-License-Identifier: MIT

"""
The JSON encoding of matrices shared by every artifact:
{"rows": r, "cols": c, "data": [[re, im], ...]} with the entries in row-major order.
"""

import json

import numpy as np

from fuzzydirac.log import Logger
from fuzzydirac.utils.exceptions import ConfigError
from fuzzydirac.utils.quality_assurance.data_sanity_testing import assert_array_well_defined


def matrix_to_dict(a: np.ndarray) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    return {
        "rows": int(a.shape[0]),
        "cols": int(a.shape[1]),
        "data": [[float(z.real), float(z.imag)] for z in a.reshape(-1)],
    }


def matrix_from_dict(dictionary: dict) -> np.ndarray:
    """
    :raises ConfigError: if keys are missing or the data does not have the announced shape
    """
    try:
        rows, cols = int(dictionary["rows"]), int(dictionary["cols"])
        data = np.asarray(dictionary["data"], dtype=float)
        if data.ndim != 2 or data.shape != (rows * cols, 2):
            raise ValueError(f"expected {rows * cols} [re, im] pairs, got an array of shape {data.shape}")
        matrix = (data[:, 0] + 1j * data[:, 1]).reshape(rows, cols)
        assert_array_well_defined(matrix, array_name="matrix")
    except (KeyError, TypeError, ValueError, AssertionError) as error:
        msg = f"Malformed matrix encoding: {error}"
        Logger().critical(msg)
        raise ConfigError(msg) from None
    return matrix


def dumps_matrix(a: np.ndarray) -> str:
    return json.dumps(matrix_to_dict(a))


def loads_matrix(text: str) -> np.ndarray:
    try:
        dictionary = json.loads(text)
    except json.JSONDecodeError as error:
        msg = f"Matrix file is not valid JSON: {error}"
        Logger().critical(msg)
        raise ConfigError(msg) from None
    return matrix_from_dict(dictionary)


def load_matrix(path: str) -> np.ndarray:
    """
    Reads a matrix file written in the JSON matrix encoding.
    """
    try:
        with open(path, "r") as matrix_file:
            text = matrix_file.read()
    except OSError as error:
        msg = f"Cannot read matrix file {path}: {error}"
        Logger().critical(msg)
        raise ConfigError(msg) from None
    return loads_matrix(text)


def save_matrix(path: str, a: np.ndarray):
    with open(path, "w") as matrix_file:
        matrix_file.write(dumps_matrix(a))
